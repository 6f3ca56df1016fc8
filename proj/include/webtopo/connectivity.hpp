// connectivity.hpp -- first- and second-order metrics: degree distribution,
// joint degree distribution, nearest-neighbour degree correlation,
// assortative coefficient and rich-club connectivity.

#pragma once

#include <optional>

#include "webtopo/curves.hpp"
#include "webtopo/graph.hpp"

namespace webtopo {

// P(k) over realized degrees only. Throws on an empty network.
MetricCurve degree_distribution(const UndirectedGraph& g);

// Ordered-endpoint-pair convention; throws when the graph has no links.
JointDegreeDistribution joint_degree_distribution(const UndirectedGraph& g);

// k_nn(k): mean degree over the neighbours pooled across all link endpoints
// at k-degree nodes. Isolated nodes carry no endpoints and are excluded.
MetricCurve knn_curve(const UndirectedGraph& g);

// Degree-mixing scalar over the link list. Empty when the denominator
// vanishes (all endpoint degrees identical, e.g. regular graphs) or when
// there are no links.
std::optional<double> assortative_coefficient(const UndirectedGraph& g);

// phi(k) = 2 E_{>k} / (N_{>k} (N_{>k}-1)), one point per realized degree k
// with at least two nodes of degree strictly greater than k.
MetricCurve rich_club_curve(const UndirectedGraph& g);

// N, L, mean degree, assortative coefficient and mean triangle coefficient.
NetworkSummary network_summary(const UndirectedGraph& g);

}  // namespace webtopo
