// curves.hpp -- metric curve and distribution value types shared by the
// metric modules.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace webtopo {

struct CurvePoint {
    double x;
    double y;
    bool operator==(const CurvePoint&) const = default;
};

// Ordered x -> y mapping; x strictly increasing, y finite.
struct MetricCurve {
    std::vector<CurvePoint> points;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
    // y at x, if x is a sample point.
    std::optional<double> at(double x) const;

    bool operator==(const MetricCurve&) const = default;
};

// P(k,k') over ordered link endpoint pairs: each link (u,v) contributes
// (k_u,k_v) and (k_v,k_u) with weight 1/(2L), so the table is symmetric
// and sums to one.
struct JointDegreeDistribution {
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> entries;

    double probability(std::uint32_t k, std::uint32_t k2) const {
        auto it = entries.find({k, k2});
        return it == entries.end() ? 0.0 : it->second;
    }
    double total() const;
    // sum_{k'} P(k,k')
    double marginal(std::uint32_t k) const;
};

// One row of the scalar network profile.
struct NetworkSummary {
    std::uint64_t nodes = 0;
    std::uint64_t links = 0;
    double average_degree = 0.0;            // 2L/N
    std::optional<double> assortative_coefficient;  // empty when degenerate
    double mean_triangle_coefficient = 0.0;
};

}  // namespace webtopo
