#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "webtopo/connectivity.hpp"
#include "webtopo/reference.hpp"

using namespace webtopo;
using namespace webtopo::testing;
using doctest::Approx;

namespace {

double sum_y(const MetricCurve& c) {
    double s = 0.0;
    for (const auto& pt : c.points) s += pt.y;
    return s;
}

}  // namespace

TEST_CASE("degree distribution of the sample site") {
    const auto pk = degree_distribution(sample_site());
    REQUIRE(pk.size() == 5);
    CHECK(pk.at(1) == 1.0 / 8);
    CHECK(pk.at(2) == 2.0 / 8);
    CHECK(pk.at(3) == 3.0 / 8);
    CHECK(pk.at(4) == 1.0 / 8);
    CHECK(pk.at(6) == 1.0 / 8);
    CHECK(sum_y(pk) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degree distribution edge cases") {
    CHECK(degree_distribution(complete_graph(5)).at(4) == 1.0);
    const auto lone = UndirectedGraph::from_arcs(1, {});
    CHECK(degree_distribution(lone).at(0) == 1.0);
    CHECK_THROWS_AS(degree_distribution(UndirectedGraph{}), std::invalid_argument);
}

TEST_CASE("joint degree distribution over ordered endpoint pairs") {
    SUBCASE("complete graph concentrates at one cell") {
        const auto jd = joint_degree_distribution(complete_graph(4));
        CHECK(jd.probability(3, 3) == 1.0);
        CHECK(jd.total() == Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("path splits evenly between (1,2) and (2,1)") {
        const auto jd = joint_degree_distribution(path_graph(3));
        CHECK(jd.probability(1, 2) == 0.5);
        CHECK(jd.probability(2, 1) == 0.5);
        CHECK(jd.probability(1, 1) == 0.0);
    }
    SUBCASE("table is symmetric") {
        const auto jd = joint_degree_distribution(sample_site());
        for (const auto& [kk, p] : jd.entries)
            CHECK(p == jd.probability(kk.second, kk.first));
    }
    CHECK_THROWS_AS(joint_degree_distribution(star_graph(0)), std::invalid_argument);
}

TEST_CASE("degree distribution projects out of the joint distribution") {
    // P(k) = (mean_k / k) * sum_k' P(k,k') for every realized k >= 1
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto g = random_graph(120, 0.06, seed);
        const auto pk = degree_distribution(g);
        const auto jd = joint_degree_distribution(g);
        const double mean_k = 2.0 * static_cast<double>(g.link_count()) /
                              static_cast<double>(g.node_count());
        for (const auto& pt : pk.points) {
            if (pt.x < 1.0) continue;
            CHECK(pt.y == Approx(mean_k / pt.x * jd.marginal(
                              static_cast<std::uint32_t>(pt.x))).epsilon(1e-12));
        }
    }
}

TEST_CASE("mean neighbour degree curve") {
    SUBCASE("path of three") {
        const auto knn = knn_curve(path_graph(3));
        CHECK(knn.at(1) == 2.0);
        CHECK(knn.at(2) == 1.0);
    }
    SUBCASE("regular graphs are flat") {
        const auto knn = knn_curve(complete_graph(6));
        REQUIRE(knn.size() == 1);
        CHECK(knn.at(5) == 5.0);
    }
    SUBCASE("isolated nodes contribute no point") {
        auto g = UndirectedGraph::from_arcs(3, {{0, 1}});
        const auto knn = knn_curve(g);
        CHECK_FALSE(knn.at(0).has_value());
    }
    SUBCASE("matches the reference on random graphs") {
        for (std::uint64_t seed : {4, 5}) {
            const auto g = random_graph(90, 0.08, seed);
            const auto fast = knn_curve(g);
            const auto slow = ref::knn_curve(g);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast.points[i].x == slow.points[i].x);
                CHECK(fast.points[i].y == Approx(slow.points[i].y).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("assortative coefficient") {
    SUBCASE("stars are perfectly disassortative") {
        const auto alpha = assortative_coefficient(star_graph(9));
        REQUIRE(alpha.has_value());
        CHECK(*alpha == Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("regular graphs have no defined coefficient") {
        CHECK_FALSE(assortative_coefficient(complete_graph(6)).has_value());
        CHECK_FALSE(assortative_coefficient(path_graph(2)).has_value());
    }
    SUBCASE("empty graph has no defined coefficient") {
        CHECK_FALSE(assortative_coefficient(UndirectedGraph{}).has_value());
    }
    SUBCASE("bounded and equal to the endpoint-pair correlation") {
        for (std::uint64_t seed : {6, 7, 8}) {
            const auto g = random_graph(100, 0.07, seed);
            const auto alpha = assortative_coefficient(g);
            const auto pearson = ref::assortative_coefficient(g);
            REQUIRE(alpha.has_value());
            REQUIRE(pearson.has_value());
            CHECK(*alpha >= -1.0);
            CHECK(*alpha <= 1.0);
            CHECK(*alpha == Approx(*pearson).epsilon(1e-9));
        }
    }
}

TEST_CASE("rich-club connectivity of the sample site") {
    const auto phi = rich_club_curve(sample_site());
    // five nodes exceed degree 2 and share eight of their ten possible links
    CHECK(phi.at(2) == 0.8);
    // only A and C exceed degree 3, and they are linked
    CHECK(phi.at(3) == 1.0);
    // nobody exceeds the top degree, and a single node is not a club
    CHECK_FALSE(phi.at(6).has_value());
    CHECK_FALSE(phi.at(4).has_value());
}

TEST_CASE("rich-club curve needs at least two qualifying nodes") {
    CHECK(rich_club_curve(complete_graph(5)).empty());
    CHECK(rich_club_curve(star_graph(9)).empty());
    CHECK(rich_club_curve(UndirectedGraph{}).empty());
}

TEST_CASE("rich-club matches the reference on random graphs") {
    for (std::uint64_t seed : {9, 10}) {
        const auto g = random_graph(80, 0.1, seed);
        const auto fast = rich_club_curve(g);
        const auto slow = ref::rich_club_curve(g);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast.points[i].x == slow.points[i].x);
            CHECK(fast.points[i].y == Approx(slow.points[i].y).epsilon(1e-12));
        }
    }
}

TEST_CASE("scalar profile of the sample site") {
    const auto s = network_summary(sample_site());
    CHECK(s.nodes == 8);
    CHECK(s.links == 12);
    CHECK(s.average_degree == 3.0);
    CHECK(s.mean_triangle_coefficient == Approx(18.0 / 8).epsilon(1e-12));
}

TEST_CASE("scalar profile of a complete graph") {
    const auto s = network_summary(complete_graph(4));
    CHECK(s.nodes == 4);
    CHECK(s.links == 6);
    CHECK(s.average_degree == 3.0);
    CHECK_FALSE(s.assortative_coefficient.has_value());
    CHECK(s.mean_triangle_coefficient == 3.0);
}
