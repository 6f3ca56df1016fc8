// graph.hpp -- compact immutable graph representations and cleaned builders.
//
// Both graph types store adjacency in CSR form with neighbor lists sorted
// ascending, which the triangle kernels rely on for linear-merge
// intersection. Construction applies the cleaning rules once (self-loops
// dropped, parallel links collapsed); after that the graphs are immutable
// and safe to read from any number of threads.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace webtopo {

using NodeId = std::uint32_t;

// Maps arbitrary string labels to contiguous node indices, first seen first.
class LabelInterner {
public:
    NodeId intern(std::string_view label);
    std::size_t size() const { return labels_.size(); }
    std::vector<std::string> take_labels() { return std::move(labels_); }

private:
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::string> labels_;
};

class UndirectedGraph {
public:
    UndirectedGraph() : offsets_{0} {}

    // arcs may contain self-loops, duplicates and both orientations;
    // they are cleaned here. Endpoints must be < node_count.
    static UndirectedGraph from_arcs(std::size_t node_count,
                                     std::vector<std::pair<NodeId, NodeId>> arcs,
                                     std::vector<std::string> labels = {});

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::uint64_t link_count() const { return neighbors_.size() / 2; }

    std::uint32_t degree(NodeId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const NodeId> adjacent(NodeId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    bool has_link(NodeId u, NodeId v) const;

    // One call per link, with u < v.
    template <typename F>
    void for_each_link(F&& f) const {
        for (NodeId u = 0; u < node_count(); ++u)
            for (std::uint64_t i = offsets_[u]; i < offsets_[u + 1]; ++i)
                if (u < neighbors_[i]) f(u, neighbors_[i]);
    }

    std::vector<std::pair<NodeId, NodeId>> links() const;

    const std::vector<std::string>& labels() const { return labels_; }
    // Label of v, or its decimal index when the graph carries no label table.
    std::string label(NodeId v) const;

    bool operator==(const UndirectedGraph&) const = default;

private:
    std::vector<std::uint64_t> offsets_;  // size node_count + 1
    std::vector<NodeId> neighbors_;       // size 2 * link_count, per-node ascending
    std::vector<std::string> labels_;     // empty = unlabeled (indices used)
};

class DirectedGraph {
public:
    DirectedGraph() : out_offsets_{0}, in_offsets_{0} {}

    static DirectedGraph from_arcs(std::size_t node_count,
                                   std::vector<std::pair<NodeId, NodeId>> arcs,
                                   std::vector<std::string> labels = {});

    std::size_t node_count() const { return out_offsets_.size() - 1; }
    std::uint64_t arc_count() const { return out_neighbors_.size(); }

    std::uint32_t out_degree(NodeId v) const {
        return static_cast<std::uint32_t>(out_offsets_[v + 1] - out_offsets_[v]);
    }
    std::uint32_t in_degree(NodeId v) const {
        return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
    }
    std::span<const NodeId> out_adjacent(NodeId v) const {
        return {out_neighbors_.data() + out_offsets_[v],
                out_neighbors_.data() + out_offsets_[v + 1]};
    }
    std::span<const NodeId> in_adjacent(NodeId v) const {
        return {in_neighbors_.data() + in_offsets_[v],
                in_neighbors_.data() + in_offsets_[v + 1]};
    }

    std::vector<std::pair<NodeId, NodeId>> arcs() const;

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const DirectedGraph&) const = default;

private:
    std::vector<std::uint64_t> out_offsets_, in_offsets_;
    std::vector<NodeId> out_neighbors_, in_neighbors_;
    std::vector<std::string> labels_;
};

// Builders from labeled edge lists (the ingest path). Self-loops are
// dropped, duplicates collapsed; for the undirected build (u,v) and (v,u)
// collapse to one link. Labels map to contiguous ids in first-seen order.
UndirectedGraph build_undirected(const std::vector<std::pair<std::string, std::string>>& edges);
DirectedGraph build_directed(const std::vector<std::pair<std::string, std::string>>& arcs);

// u--v present iff u->v or v->u.
UndirectedGraph to_undirected(const DirectedGraph& g);

inline std::uint32_t degree(const UndirectedGraph& g, NodeId v) { return g.degree(v); }
inline std::uint32_t in_degree(const DirectedGraph& g, NodeId v) { return g.in_degree(v); }
inline std::uint32_t out_degree(const DirectedGraph& g, NodeId v) { return g.out_degree(v); }

}  // namespace webtopo
