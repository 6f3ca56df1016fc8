#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "webtopo/curves.hpp"

namespace webtopo {

// Pointwise average of several per-network curves.  An x value enters the
// averaged curve only when enough member curves define it: the threshold is
// ceil(min_support_ratio * curves.size()).  Member values are summed in
// ascending order so the result does not depend on the order the curves are
// supplied in.
MetricCurve average_curves(const std::vector<MetricCurve>& curves,
                           double min_support_ratio = 2.0 / 3.0);

// y ~ 10^(a*log10(x)^2 + b*log10(x) + c), fitted over positive (x, y) pairs.
struct QuadraticLogFit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double x_min = 0.0;      // fitted domain
    double x_max = 0.0;
    double residual_rms = 0.0;  // in log10(y) space

    double operator()(double x) const;
};

// Least squares in (log10 x, log10 y).  Points with x <= 0 or y <= 0 are
// skipped; fewer than three usable points is an error.
QuadraticLogFit fit_quadratic_loglog(const MetricCurve& curve);

// The canonical degree-distribution fit used as a comparison baseline:
// log10 y = -0.3579 t^2 + 2.9432 t - 1.1907 with t = log10 x.
QuadraticLogFit reference_fit();
double eval_reference(double x);

// Log-space divergence between a curve and a fit over their common domain.
struct DivergenceReport {
    double rms = 0.0;        // root mean square of log10(y) - log10(fit(x))
    double max_abs = 0.0;    // worst single deviation
    std::size_t points_used = 0;
    std::size_t points_skipped = 0;  // x or y outside the positive domain
};

DivergenceReport compare_to_fit(const MetricCurve& curve,
                                const QuadraticLogFit& fit);
DivergenceReport compare_to_reference(const MetricCurve& curve);

// Slope-based exponent estimate for a power-law tail: fits log10 y against
// log10 x over points with x >= x_min and returns the negated slope.
double estimate_powerlaw_exponent(const MetricCurve& curve, double x_min = 1.0);

}  // namespace webtopo
