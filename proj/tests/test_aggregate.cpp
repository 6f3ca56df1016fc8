#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "webtopo/aggregate.hpp"

using namespace webtopo;
using doctest::Approx;

namespace {

MetricCurve curve(std::initializer_list<CurvePoint> pts) { return {pts}; }

MetricCurve sample_reference(const std::vector<double>& xs) {
    MetricCurve c;
    for (double x : xs) c.points.push_back({x, eval_reference(x)});
    return c;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) *
                                                    static_cast<double>(i) /
                                                    static_cast<double>(n - 1));
    return xs;
}

}  // namespace

TEST_CASE("averaging respects the support threshold") {
    const std::vector<MetricCurve> curves{curve({{1, 1}, {2, 2}}), curve({{1, 3}})};
    SUBCASE("two thirds of two curves means both") {
        const auto avg = average_curves(curves, 2.0 / 3.0);
        REQUIRE(avg.size() == 1);
        CHECK(avg.at(1) == 2.0);
    }
    SUBCASE("half keeps singly supported points") {
        const auto avg = average_curves(curves, 0.5);
        REQUIRE(avg.size() == 2);
        CHECK(avg.at(2) == 2.0);
    }
    SUBCASE("ratio one keeps the common domain only") {
        const auto avg = average_curves(curves, 1.0);
        REQUIRE(avg.size() == 1);
        CHECK(avg.at(1) == 2.0);
    }
}

TEST_CASE("threshold count rounds up") {
    // four curves at ratio 2/3 -> a point needs ceil(8/3) = 3 members
    std::vector<MetricCurve> curves{curve({{5, 1}}), curve({{5, 2}}),
                                    curve({{5, 3}}), curve({{7, 9}})};
    const auto avg = average_curves(curves, 2.0 / 3.0);
    REQUIRE(avg.size() == 1);
    CHECK(avg.at(5) == 2.0);
}

TEST_CASE("averaging one curve is the identity") {
    const auto c = curve({{1, 0.25}, {3, 0.5}, {9, 0.125}});
    CHECK(average_curves({c}, 2.0 / 3.0) == c);
}

TEST_CASE("average is independent of input order") {
    std::mt19937_64 rng(31);
    std::vector<MetricCurve> curves;
    for (int i = 0; i < 9; ++i) {
        MetricCurve c;
        for (double x : {1.0, 2.0, 4.0, 8.0})
            if (rng() % 4 != 0)
                c.points.push_back({x, std::ldexp(1.0, -static_cast<int>(rng() % 40))
                                            + 0.1 * static_cast<double>(rng() % 7)});
        curves.push_back(std::move(c));
    }
    const auto base = average_curves(curves);
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(curves.begin(), curves.end(), rng);
        const auto again = average_curves(curves);
        CHECK(again == base);  // bit-for-bit, not approximately
    }
}

TEST_CASE("averaging rejects bad arguments") {
    CHECK_THROWS_AS(average_curves({}), std::invalid_argument);
    CHECK_THROWS_AS(average_curves({curve({{1, 1}})}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(average_curves({curve({{1, 1}})}, 1.5), std::invalid_argument);
}

TEST_CASE("baseline curve arithmetic") {
    CHECK(eval_reference(10.0) == Approx(std::pow(10.0, 1.3946)).epsilon(1e-9));
    CHECK(eval_reference(1.0) == Approx(std::pow(10.0, -1.1907)).epsilon(1e-9));
    const auto fit = reference_fit();
    CHECK(fit(10.0) == eval_reference(10.0));
}

TEST_CASE("fitting exact samples recovers the coefficients") {
    const auto fit = fit_quadratic_loglog(
        sample_reference({1, 2, 5, 10, 100, 1000}));
    CHECK(fit.a == Approx(-0.3579).epsilon(1e-9));
    CHECK(fit.b == Approx(2.9432).epsilon(1e-9));
    CHECK(fit.c == Approx(-1.1907).epsilon(1e-9));
    CHECK(fit.residual_rms == Approx(0.0).scale(1).epsilon(1e-9));
    CHECK(fit.x_min == Approx(1.0).epsilon(1e-12));
    CHECK(fit.x_max == Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("a pure power law fits with no curvature") {
    MetricCurve c;
    for (double x : log_spaced(1, 1e4, 25)) c.points.push_back({x, 3.0 * std::pow(x, -2.5)});
    const auto fit = fit_quadratic_loglog(c);
    CHECK(fit.a == Approx(0.0).scale(1).epsilon(1e-9));
    CHECK(fit.b == Approx(-2.5).epsilon(1e-9));
    CHECK(fit.c == Approx(std::log10(3.0)).epsilon(1e-9));
}

TEST_CASE("fit input filtering") {
    CHECK_THROWS_AS(fit_quadratic_loglog(curve({{1, 1}, {2, 2}})),
                    std::invalid_argument);
    // nonpositive values are skipped, not fatal, when enough points remain
    MetricCurve c = sample_reference({1, 2, 5, 10});
    c.points.push_back({20, 0.0});
    c.points.insert(c.points.begin(), {0.0, 5.0});
    const auto fit = fit_quadratic_loglog(c);
    CHECK(fit.b == Approx(2.9432).epsilon(1e-9));
    // all points degenerate (same x) -> singular system
    CHECK_THROWS_AS(fit_quadratic_loglog(curve({{3, 1}, {3, 2}, {3, 4}, {3, 8}})),
                    std::invalid_argument);
}

TEST_CASE("divergence of a curve from a fit") {
    SUBCASE("the baseline diverges from itself by nothing") {
        const auto rep = compare_to_reference(sample_reference(log_spaced(1, 1e3, 40)));
        CHECK(rep.rms == Approx(0.0).scale(1).epsilon(1e-12));
        CHECK(rep.max_abs == Approx(0.0).scale(1).epsilon(1e-12));
        CHECK(rep.points_used == 40);
        CHECK(rep.points_skipped == 0);
    }
    SUBCASE("a constant factor shows up as its log") {
        auto c = sample_reference(log_spaced(1, 1e3, 10));
        for (auto& pt : c.points) pt.y *= 100.0;
        const auto rep = compare_to_reference(c);
        CHECK(rep.rms == Approx(2.0).epsilon(1e-9));
        CHECK(rep.max_abs == Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("zero values are skipped and counted") {
        auto c = sample_reference({1, 10, 100});
        c.points.push_back({200, 0.0});
        const auto rep = compare_to_reference(c);
        CHECK(rep.points_used == 3);
        CHECK(rep.points_skipped == 1);
    }
}

TEST_CASE("power-law exponent from the tail slope") {
    MetricCurve c;
    for (double x : log_spaced(1, 1e3, 15)) c.points.push_back({x, 7.0 * std::pow(x, -2.1)});
    CHECK(estimate_powerlaw_exponent(c) == Approx(2.1).epsilon(1e-12));
    // x_min excludes a contaminated head
    c.points.front().y = 1e6;
    CHECK(estimate_powerlaw_exponent(c, 2.0) == Approx(2.1).epsilon(1e-12));
    CHECK_THROWS_AS(estimate_powerlaw_exponent(curve({{1, 1}})), std::invalid_argument);
}
