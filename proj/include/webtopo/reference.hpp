#pragma once

// Serial, per-definition implementations of every metric. Each routine works
// straight from the link list with its own adjacency structures and favours
// the most literal translation of the defining formula over speed. They are
// the ground truth the parallel kernels are tested against, and the baseline
// the benchmark compares against; do not optimise them.

#include <cstdint>
#include <optional>
#include <vector>

#include "webtopo/curves.hpp"
#include "webtopo/graph.hpp"
#include "webtopo/triangles.hpp"

namespace webtopo::ref {

MetricCurve degree_distribution(const UndirectedGraph& g);
JointDegreeDistribution joint_degree_distribution(const UndirectedGraph& g);
MetricCurve knn_curve(const UndirectedGraph& g);
std::optional<double> assortative_coefficient(const UndirectedGraph& g);
MetricCurve rich_club_curve(const UndirectedGraph& g);

// Links among each node's neighbourhood, counted pair by pair.
std::vector<std::uint64_t> triangle_coefficients(const UndirectedGraph& g);
std::vector<double> clustering_coefficients(const UndirectedGraph& g);
DirectedTriangleProfile directed_triangle_coefficients(const DirectedGraph& g);

MetricCurve triangle_ccdf(const UndirectedGraph& g);
MetricCurve delta_of_k_curve(const UndirectedGraph& g);
MetricCurve c_of_k_curve(const UndirectedGraph& g);

}  // namespace webtopo::ref
