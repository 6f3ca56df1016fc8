#include "webtopo/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace webtopo::ref {

namespace {

// Independent adjacency built from the link list alone.
std::vector<std::set<NodeId>> neighbor_sets(const UndirectedGraph& g) {
    std::vector<std::set<NodeId>> adj(g.node_count());
    for (auto [u, v] : g.links()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

}  // namespace

MetricCurve degree_distribution(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    std::map<std::size_t, std::size_t> hist;
    for (const auto& nb : adj) ++hist[nb.size()];
    MetricCurve out;
    for (auto [k, cnt] : hist)
        out.points.push_back({static_cast<double>(k),
                              static_cast<double>(cnt) /
                                  static_cast<double>(g.node_count())});
    return out;
}

JointDegreeDistribution joint_degree_distribution(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    const auto links = g.links();
    JointDegreeDistribution jd;
    const double w = 1.0 / (2.0 * static_cast<double>(links.size()));
    for (auto [u, v] : links) {
        const auto ku = static_cast<std::uint32_t>(adj[u].size());
        const auto kv = static_cast<std::uint32_t>(adj[v].size());
        jd.entries[{ku, kv}] += w;
        jd.entries[{kv, ku}] += w;
    }
    return jd;
}

MetricCurve knn_curve(const UndirectedGraph& g) {
    // average, over nodes of degree k, of the node's mean neighbour degree
    const auto adj = neighbor_sets(g);
    std::map<std::size_t, std::pair<double, std::size_t>> acc;  // k -> (sum, count)
    for (const auto& nb : adj) {
        if (nb.empty()) continue;
        double mean = 0.0;
        for (NodeId u : nb) mean += static_cast<double>(adj[u].size());
        mean /= static_cast<double>(nb.size());
        auto& [sum, cnt] = acc[nb.size()];
        sum += mean;
        ++cnt;
    }
    MetricCurve out;
    for (auto [k, sc] : acc)
        out.points.push_back(
            {static_cast<double>(k), sc.first / static_cast<double>(sc.second)});
    return out;
}

std::optional<double> assortative_coefficient(const UndirectedGraph& g) {
    // Pearson correlation of degrees over ordered link endpoint pairs
    const auto adj = neighbor_sets(g);
    std::vector<double> xs, ys;
    for (auto [u, v] : g.links()) {
        const auto ku = static_cast<double>(adj[u].size());
        const auto kv = static_cast<double>(adj[v].size());
        xs.push_back(ku);
        ys.push_back(kv);
        xs.push_back(kv);
        ys.push_back(ku);
    }
    if (xs.empty()) return std::nullopt;

    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    for (double x : xs) mx += x;
    mx /= n;
    // symmetric sample, so both endpoints share the same mean and variance
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cov += (xs[i] - mx) * (ys[i] - mx);
        var += (xs[i] - mx) * (xs[i] - mx);
    }
    if (var <= 0.0 || var < 1e-12 * mx * mx * n) return std::nullopt;
    return cov / var;
}

MetricCurve rich_club_curve(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    const auto links = g.links();
    std::set<std::size_t> degrees;
    for (const auto& nb : adj) degrees.insert(nb.size());

    MetricCurve out;
    for (std::size_t k : degrees) {
        std::size_t n_above = 0;
        for (const auto& nb : adj)
            if (nb.size() > k) ++n_above;
        if (n_above < 2) continue;
        std::uint64_t e_above = 0;
        for (auto [u, v] : links)
            if (adj[u].size() > k && adj[v].size() > k) ++e_above;
        const double denom =
            static_cast<double>(n_above) * static_cast<double>(n_above - 1) / 2.0;
        out.points.push_back(
            {static_cast<double>(k), static_cast<double>(e_above) / denom});
    }
    return out;
}

std::vector<std::uint64_t> triangle_coefficients(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    std::vector<std::uint64_t> delta(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        // count links between neighbours, pair by pair
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                if (adj[*it].count(*jt)) ++delta[v];
    }
    return delta;
}

std::vector<double> clustering_coefficients(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    const auto delta = ref::triangle_coefficients(g);
    std::vector<double> c(g.node_count(), std::nan(""));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double k = static_cast<double>(adj[v].size());
        if (k < 2.0) continue;
        c[v] = static_cast<double>(delta[v]) / (k * (k - 1.0) / 2.0);
    }
    return c;
}

DirectedTriangleProfile directed_triangle_coefficients(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::set<NodeId>> in(n), out(n);
    std::set<std::pair<NodeId, NodeId>> arcset;
    for (auto [u, v] : g.arcs()) {
        out[u].insert(v);
        in[v].insert(u);
        arcset.insert({u, v});
    }
    const auto linked = [&](NodeId a, NodeId b) {
        return arcset.count({a, b}) || arcset.count({b, a});
    };

    DirectedTriangleProfile p;
    p.delta_in.assign(n, 0);
    p.delta_out.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        for (auto it = in[v].begin(); it != in[v].end(); ++it)
            for (auto jt = std::next(it); jt != in[v].end(); ++jt)
                if (linked(*it, *jt)) ++p.delta_in[v];
        for (auto it = out[v].begin(); it != out[v].end(); ++it)
            for (auto jt = std::next(it); jt != out[v].end(); ++jt)
                if (linked(*it, *jt)) ++p.delta_out[v];
    }
    return p;
}

MetricCurve triangle_ccdf(const UndirectedGraph& g) {
    const auto delta = ref::triangle_coefficients(g);
    const double n = static_cast<double>(delta.size());
    std::set<std::uint64_t> xs = {0};
    for (auto d : delta) xs.insert(d);
    MetricCurve out;
    for (auto x : xs) {
        std::size_t above = 0;
        for (auto d : delta)
            if (d > x) ++above;
        out.points.push_back(
            {static_cast<double>(x), static_cast<double>(above) / n});
    }
    return out;
}

MetricCurve delta_of_k_curve(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    const auto delta = ref::triangle_coefficients(g);
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto& [sum, cnt] = acc[adj[v].size()];
        sum += static_cast<double>(delta[v]);
        ++cnt;
    }
    MetricCurve out;
    for (auto [k, sc] : acc)
        out.points.push_back(
            {static_cast<double>(k), sc.first / static_cast<double>(sc.second)});
    return out;
}

MetricCurve c_of_k_curve(const UndirectedGraph& g) {
    const auto adj = neighbor_sets(g);
    const auto c = ref::clustering_coefficients(g);
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (adj[v].size() < 2) continue;
        auto& [sum, cnt] = acc[adj[v].size()];
        sum += c[v];
        ++cnt;
    }
    MetricCurve out;
    for (auto [k, sc] : acc)
        out.points.push_back(
            {static_cast<double>(k), sc.first / static_cast<double>(sc.second)});
    return out;
}

}  // namespace webtopo::ref
