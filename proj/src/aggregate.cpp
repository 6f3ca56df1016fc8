#include "webtopo/aggregate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace webtopo {

MetricCurve average_curves(const std::vector<MetricCurve>& curves,
                           double min_support_ratio) {
    if (curves.empty()) throw std::invalid_argument("no curves to average");
    if (!(min_support_ratio > 0.0) || min_support_ratio > 1.0)
        throw std::invalid_argument("min_support_ratio must be in (0, 1]");

    const auto need = static_cast<std::size_t>(
        std::ceil(min_support_ratio * static_cast<double>(curves.size())));

    std::map<double, std::vector<double>> pooled;
    for (const auto& c : curves)
        for (const auto& pt : c.points) pooled[pt.x].push_back(pt.y);

    MetricCurve out;
    for (auto& [x, ys] : pooled) {
        if (ys.size() < need) continue;
        // fixed summation order -> identical result for any input permutation
        std::sort(ys.begin(), ys.end());
        double sum = 0.0;
        for (double y : ys) sum += y;
        out.points.push_back({x, sum / static_cast<double>(ys.size())});
    }
    return out;
}

double QuadraticLogFit::operator()(double x) const {
    const double t = std::log10(x);
    return std::pow(10.0, (a * t + b) * t + c);
}

QuadraticLogFit fit_quadratic_loglog(const MetricCurve& curve) {
    std::vector<std::array<double, 2>> pts;  // (t, z) = (log10 x, log10 y)
    for (const auto& pt : curve.points) {
        if (pt.x <= 0.0 || pt.y <= 0.0) continue;
        pts.push_back({std::log10(pt.x), std::log10(pt.y)});
    }
    if (pts.size() < 3)
        throw std::invalid_argument(
            "quadratic fit needs at least three positive points");

    // centre t to keep the normal equations well conditioned
    double t_mean = 0.0;
    for (const auto& p : pts) t_mean += p[0];
    t_mean /= static_cast<double>(pts.size());

    // accumulate moments of u = t - t_mean
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    double z0 = 0, z1 = 0, z2 = 0;
    const double n = static_cast<double>(pts.size());
    for (const auto& p : pts) {
        const double u = p[0] - t_mean;
        const double u2 = u * u;
        s1 += u;
        s2 += u2;
        s3 += u2 * u;
        s4 += u2 * u2;
        z0 += p[1];
        z1 += u * p[1];
        z2 += u2 * p[1];
    }

    // solve the 3x3 symmetric system for z ~ A u^2 + B u + C
    const double m[3][3] = {{s4, s3, s2}, {s3, s2, s1}, {s2, s1, n}};
    const double rhs[3] = {z2, z1, z0};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-30)
        throw std::invalid_argument("degenerate points for quadratic fit");

    auto solve = [&](int col) {
        double mm[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) mm[r][c] = (c == col) ? rhs[r] : m[r][c];
        const double d = mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
                         mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
                         mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
        return d / det;
    };
    const double qa = solve(0);
    const double qb = solve(1);
    const double qc = solve(2);

    QuadraticLogFit fit;
    // expand A(t - t_mean)^2 + B(t - t_mean) + C back to powers of t
    fit.a = qa;
    fit.b = qb - 2.0 * qa * t_mean;
    fit.c = qa * t_mean * t_mean - qb * t_mean + qc;

    double lo = pts.front()[0], hi = pts.front()[0];
    double ss = 0.0;
    for (const auto& p : pts) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
        const double pred = (fit.a * p[0] + fit.b) * p[0] + fit.c;
        const double r = p[1] - pred;
        ss += r * r;
    }
    fit.x_min = std::pow(10.0, lo);
    fit.x_max = std::pow(10.0, hi);
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

QuadraticLogFit reference_fit() {
    QuadraticLogFit fit;
    fit.a = -0.3579;
    fit.b = 2.9432;
    fit.c = -1.1907;
    fit.x_min = 1.0;
    fit.x_max = 1e5;
    return fit;
}

double eval_reference(double x) { return reference_fit()(x); }

DivergenceReport compare_to_fit(const MetricCurve& curve,
                                const QuadraticLogFit& fit) {
    DivergenceReport rep;
    double ss = 0.0;
    for (const auto& pt : curve.points) {
        if (pt.x <= 0.0 || pt.y <= 0.0) {
            ++rep.points_skipped;
            continue;
        }
        const double t = std::log10(pt.x);
        const double dev = std::log10(pt.y) - ((fit.a * t + fit.b) * t + fit.c);
        ss += dev * dev;
        rep.max_abs = std::max(rep.max_abs, std::abs(dev));
        ++rep.points_used;
    }
    if (rep.points_used > 0)
        rep.rms = std::sqrt(ss / static_cast<double>(rep.points_used));
    return rep;
}

DivergenceReport compare_to_reference(const MetricCurve& curve) {
    return compare_to_fit(curve, reference_fit());
}

double estimate_powerlaw_exponent(const MetricCurve& curve, double x_min) {
    double st = 0, sz = 0, stt = 0, stz = 0;
    std::size_t n = 0;
    for (const auto& pt : curve.points) {
        if (pt.x < x_min || pt.x <= 0.0 || pt.y <= 0.0) continue;
        const double t = std::log10(pt.x);
        const double z = std::log10(pt.y);
        st += t;
        sz += z;
        stt += t * t;
        stz += t * z;
        ++n;
    }
    if (n < 2)
        throw std::invalid_argument(
            "power-law estimate needs at least two positive points");
    const double den =
        static_cast<double>(n) * stt - st * st;
    if (std::abs(den) < 1e-30)
        throw std::invalid_argument("degenerate x values for power-law estimate");
    const double slope = (static_cast<double>(n) * stz - st * sz) / den;
    return -slope;
}

}  // namespace webtopo
