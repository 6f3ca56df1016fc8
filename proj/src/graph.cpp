#include "webtopo/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace webtopo {

namespace {

inline std::uint64_t pack(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Sorted, deduplicated arc set with self-loops removed. When `collapse` is
// set, each pair is normalized to (min,max) first so both orientations and
// parallel links land on the same key.
std::vector<std::uint64_t> clean_arcs(std::vector<std::pair<NodeId, NodeId>>& arcs,
                                      bool collapse) {
    std::vector<std::uint64_t> keys;
    keys.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        if (u == v) continue;
        if (collapse && u > v) std::swap(u, v);
        keys.push_back(pack(u, v));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace

NodeId LabelInterner::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    return id;
}

UndirectedGraph UndirectedGraph::from_arcs(std::size_t node_count,
                                           std::vector<std::pair<NodeId, NodeId>> arcs,
                                           std::vector<std::string> labels) {
    for (auto [u, v] : arcs)
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");

    auto keys = clean_arcs(arcs, /*collapse=*/true);

    UndirectedGraph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(node_count + 1, 0);
    for (auto k : keys) {
        ++g.offsets_[(k >> 32) + 1];
        ++g.offsets_[(k & 0xffffffffu) + 1];
    }
    for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.neighbors_.resize(keys.size() * 2);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto k : keys) {
        NodeId u = static_cast<NodeId>(k >> 32);
        NodeId v = static_cast<NodeId>(k & 0xffffffffu);
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    // keys were sorted by (u,v), so each u-run is emitted ascending; the
    // v-side entries also arrive ascending because u increases monotonically.
    return g;
}

bool UndirectedGraph::has_link(NodeId u, NodeId v) const {
    auto adj = adjacent(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> UndirectedGraph::links() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(link_count());
    for_each_link([&](NodeId u, NodeId v) { out.emplace_back(u, v); });
    return out;
}

std::string UndirectedGraph::label(NodeId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

DirectedGraph DirectedGraph::from_arcs(std::size_t node_count,
                                       std::vector<std::pair<NodeId, NodeId>> arcs,
                                       std::vector<std::string> labels) {
    for (auto [u, v] : arcs)
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("arc endpoint out of range");

    auto keys = clean_arcs(arcs, /*collapse=*/false);

    DirectedGraph g;
    g.labels_ = std::move(labels);
    g.out_offsets_.assign(node_count + 1, 0);
    g.in_offsets_.assign(node_count + 1, 0);
    for (auto k : keys) {
        ++g.out_offsets_[(k >> 32) + 1];
        ++g.in_offsets_[(k & 0xffffffffu) + 1];
    }
    for (std::size_t v = 0; v < node_count; ++v) {
        g.out_offsets_[v + 1] += g.out_offsets_[v];
        g.in_offsets_[v + 1] += g.in_offsets_[v];
    }

    g.out_neighbors_.resize(keys.size());
    g.in_neighbors_.resize(keys.size());
    std::vector<std::uint64_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    std::uint64_t pos = 0;
    for (auto k : keys) {
        NodeId u = static_cast<NodeId>(k >> 32);
        NodeId v = static_cast<NodeId>(k & 0xffffffffu);
        g.out_neighbors_[pos++] = v;  // key order keeps each out-run ascending
        g.in_neighbors_[cursor[v]++] = u;
    }
    return g;
}

std::vector<std::pair<NodeId, NodeId>> DirectedGraph::arcs() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(arc_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : out_adjacent(u)) out.emplace_back(u, v);
    return out;
}

namespace {

std::pair<std::vector<std::pair<NodeId, NodeId>>, std::vector<std::string>>
intern_pairs(const std::vector<std::pair<std::string, std::string>>& edges) {
    LabelInterner interner;
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const NodeId u = interner.intern(a);
        const NodeId v = interner.intern(b);
        arcs.emplace_back(u, v);
    }
    return {std::move(arcs), interner.take_labels()};
}

}  // namespace

UndirectedGraph build_undirected(const std::vector<std::pair<std::string, std::string>>& edges) {
    auto [arcs, labels] = intern_pairs(edges);
    const std::size_t n = labels.size();
    return UndirectedGraph::from_arcs(n, std::move(arcs), std::move(labels));
}

DirectedGraph build_directed(const std::vector<std::pair<std::string, std::string>>& arcs) {
    auto [pairs, labels] = intern_pairs(arcs);
    const std::size_t n = labels.size();
    return DirectedGraph::from_arcs(n, std::move(pairs), std::move(labels));
}

UndirectedGraph to_undirected(const DirectedGraph& g) {
    return UndirectedGraph::from_arcs(g.node_count(), g.arcs(), g.labels());
}

}  // namespace webtopo
