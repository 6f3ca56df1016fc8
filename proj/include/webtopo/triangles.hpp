// triangles.hpp -- third-order metrics. The per-node triangle coefficient
// Delta counts links among a node's neighbours; the directed variants count
// closures among in- or out-neighbourhoods. The undirected kernel is the
// hot path of the whole toolkit and is parallelized with OpenMP; results
// are schedule-independent because all accumulation is integer.

#pragma once

#include <cstdint>
#include <vector>

#include "webtopo/curves.hpp"
#include "webtopo/graph.hpp"

namespace webtopo {

struct TriangleProfile {
    std::vector<std::uint64_t> delta;  // per node
    // Per-node clustering coefficient, NaN where degree < 2. Only filled by
    // clustering_coefficients().
    std::vector<double> clustering;
};

struct DirectedTriangleProfile {
    std::vector<std::uint64_t> delta_in;
    std::vector<std::uint64_t> delta_out;
};

// Delta(v) for every node, via degree-ordered neighbour intersection.
TriangleProfile triangle_coefficients(const UndirectedGraph& g);

// Delta plus C(v) = Delta / (k(k-1)/2) for k >= 2.
TriangleProfile clustering_coefficients(const UndirectedGraph& g);

// Delta_in(v): unordered in-neighbour pairs joined by an arc in either
// direction; Delta_out analogous.
DirectedTriangleProfile directed_triangle_coefficients(const DirectedGraph& g);

// P_c(Delta): fraction of nodes with triangle coefficient strictly greater
// than Delta, sampled at 0 and every realized value. Throws when empty.
MetricCurve triangle_ccdf(const UndirectedGraph& g, const TriangleProfile& profile);
MetricCurve triangle_ccdf(const UndirectedGraph& g);

// Mean Delta over the nodes of each realized degree.
MetricCurve delta_of_k_curve(const UndirectedGraph& g, const TriangleProfile& profile);
MetricCurve delta_of_k_curve(const UndirectedGraph& g);

// Mean C over the nodes of each realized degree k >= 2.
MetricCurve c_of_k_curve(const UndirectedGraph& g, const TriangleProfile& profile);
MetricCurve c_of_k_curve(const UndirectedGraph& g);

// Mean Delta_in over the nodes of each realized in-degree, and the
// out-side counterpart.
MetricCurve delta_in_of_k_curve(const DirectedGraph& g,
                                const DirectedTriangleProfile& profile);
MetricCurve delta_out_of_k_curve(const DirectedGraph& g,
                                 const DirectedTriangleProfile& profile);

}  // namespace webtopo
