// Shared test graphs. sample_site() is a small labeled web-site graph with a
// hand-checkable metric profile (degrees {4,3,6,3,3,2,1,2}, six triangles);
// sample_site_arcs() is its directed companion. The expected values asserted
// against them in the suites were hand-counted and cross-checked with the
// brute-force reference implementations.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "webtopo/generate.hpp"
#include "webtopo/graph.hpp"

namespace webtopo::testing {

using LabeledEdges = std::vector<std::pair<std::string, std::string>>;

inline LabeledEdges sample_site_edges() {
    return {{"A", "B"}, {"A", "C"}, {"A", "D"}, {"A", "E"},
            {"B", "C"}, {"B", "G"}, {"C", "D"}, {"C", "E"},
            {"C", "F"}, {"C", "H"}, {"D", "E"}, {"F", "H"}};
}

inline UndirectedGraph sample_site() { return build_undirected(sample_site_edges()); }

inline LabeledEdges sample_site_arc_list() {
    return {{"B", "A"}, {"C", "A"}, {"E", "A"}, {"A", "C"},
            {"A", "D"}, {"B", "C"}, {"E", "C"}, {"C", "D"}};
}

inline DirectedGraph sample_site_arcs() {
    return build_directed(sample_site_arc_list());
}

// Node id of a label in a graph built from the fixtures above (labels are
// interned in first-seen order, so this is a lookup, not a constant).
template <typename Graph>
NodeId id_of(const Graph& g, const std::string& label) {
    const auto& labels = g.labels();
    for (NodeId v = 0; v < labels.size(); ++v)
        if (labels[v] == label) return v;
    throw std::logic_error("label not in fixture: " + label);
}

inline UndirectedGraph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return UndirectedGraph::from_arcs(n, std::move(edges));
}

inline UndirectedGraph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return UndirectedGraph::from_arcs(n, std::move(edges));
}

// Node 0 is the hub.
inline UndirectedGraph star_graph(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(NodeId{0}, v);
    return UndirectedGraph::from_arcs(leaves + 1, std::move(edges));
}

inline UndirectedGraph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
    return generate_er({.n = n, .p = p, .seed = seed});
}

}  // namespace webtopo::testing
