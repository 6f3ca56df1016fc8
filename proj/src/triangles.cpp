#include "webtopo/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace webtopo {

namespace {

// |a intersect b| for ascending id lists. Linear merge for comparable
// sizes, galloping from the shorter side when the lists are lopsided.
std::uint64_t intersect_count(std::span<const NodeId> a, std::span<const NodeId> b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return 0;
    std::uint64_t count = 0;
    if (a.size() * 32 < b.size()) {
        const NodeId* lo = b.data();
        const NodeId* end = b.data() + b.size();
        for (NodeId x : a) {
            lo = std::lower_bound(lo, end, x);
            if (lo == end) break;
            if (*lo == x) ++count;
        }
        return count;
    }
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

// Adjacency oriented from lower to higher (degree, id) rank, in rank space.
// Every triangle appears exactly once as (edge low->mid, apex high), and
// each oriented list is short: O(sqrt(2L)) amortized.
struct ForwardDag {
    std::vector<NodeId> order;            // rank -> original id
    std::vector<std::uint64_t> offsets;   // per rank
    std::vector<NodeId> targets;          // ascending rank ids

    std::span<const NodeId> out(NodeId r) const {
        return {targets.data() + offsets[r], targets.data() + offsets[r + 1]};
    }
};

ForwardDag build_forward_dag(const UndirectedGraph& g) {
    const std::size_t n = g.node_count();
    ForwardDag dag;
    dag.order.resize(n);
    std::iota(dag.order.begin(), dag.order.end(), NodeId{0});
    std::sort(dag.order.begin(), dag.order.end(), [&](NodeId a, NodeId b) {
        auto da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<NodeId> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[dag.order[r]] = static_cast<NodeId>(r);

    dag.offsets.assign(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
        const NodeId rv = rank[v];
        for (NodeId u : g.adjacent(v))
            if (rank[u] > rv) ++dag.offsets[rv + 1];
    }
    for (std::size_t r = 0; r < n; ++r) dag.offsets[r + 1] += dag.offsets[r];

    dag.targets.resize(g.link_count());
    std::vector<std::uint64_t> cursor(dag.offsets.begin(), dag.offsets.end() - 1);
    for (std::size_t r = 0; r < n; ++r) {
        const NodeId v = dag.order[r];
        for (NodeId u : g.adjacent(v))
            if (rank[u] > r) dag.targets[cursor[r]++] = rank[u];
        std::sort(dag.targets.begin() + static_cast<std::ptrdiff_t>(dag.offsets[r]),
                  dag.targets.begin() + static_cast<std::ptrdiff_t>(dag.offsets[r + 1]));
    }
    return dag;
}

}  // namespace

TriangleProfile triangle_coefficients(const UndirectedGraph& g) {
    const std::size_t n = g.node_count();
    TriangleProfile profile;
    profile.delta.assign(n, 0);
    if (n == 0 || g.link_count() == 0) return profile;

    ForwardDag dag = build_forward_dag(g);
    std::vector<std::uint64_t> delta(n, 0);

    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t r = 0; r < nn; ++r) {
        auto out_r = dag.out(static_cast<NodeId>(r));
        std::uint64_t local = 0;
        for (std::size_t i = 0; i < out_r.size(); ++i) {
            const NodeId s = out_r[i];
            auto out_s = dag.out(s);
            // common higher-ranked neighbours close a triangle apiece
            std::size_t a = i + 1, b = 0;
            std::uint64_t closed = 0;
            while (a < out_r.size() && b < out_s.size()) {
                if (out_r[a] < out_s[b]) ++a;
                else if (out_r[a] > out_s[b]) ++b;
                else {
                    const NodeId w = out_r[a];
#pragma omp atomic
                    ++delta[w];
                    ++closed;
                    ++a; ++b;
                }
            }
            if (closed > 0) {
#pragma omp atomic
                delta[s] += closed;
                local += closed;
            }
        }
        if (local > 0) {
#pragma omp atomic
            delta[r] += local;
        }
    }

    for (std::size_t r = 0; r < n; ++r) profile.delta[dag.order[r]] = delta[r];
    return profile;
}

TriangleProfile clustering_coefficients(const UndirectedGraph& g) {
    TriangleProfile profile = triangle_coefficients(g);
    profile.clustering.assign(g.node_count(), std::numeric_limits<double>::quiet_NaN());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::uint64_t k = g.degree(v);
        if (k < 2) continue;
        profile.clustering[v] = static_cast<double>(profile.delta[v]) /
                                (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
    }
    return profile;
}

DirectedTriangleProfile directed_triangle_coefficients(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    DirectedTriangleProfile profile;
    profile.delta_in.assign(n, 0);
    profile.delta_out.assign(n, 0);
    if (n == 0) return profile;

    // The closing link between two in-neighbours (or out-neighbours) may
    // point either way, so closures are looked up in the collapsed graph.
    const UndirectedGraph und = to_undirected(g);

    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t v = 0; v < nn; ++v) {
        const NodeId node = static_cast<NodeId>(v);
        std::uint64_t twice_in = 0;
        auto in_nbrs = g.in_adjacent(node);
        for (NodeId u : in_nbrs) twice_in += intersect_count(und.adjacent(u), in_nbrs);
        profile.delta_in[node] = twice_in / 2;

        std::uint64_t twice_out = 0;
        auto out_nbrs = g.out_adjacent(node);
        for (NodeId u : out_nbrs) twice_out += intersect_count(und.adjacent(u), out_nbrs);
        profile.delta_out[node] = twice_out / 2;
    }
    return profile;
}

MetricCurve triangle_ccdf(const UndirectedGraph& g, const TriangleProfile& profile) {
    if (g.node_count() == 0) throw std::invalid_argument("empty network");
    std::vector<std::uint64_t> values(profile.delta);
    std::sort(values.begin(), values.end());

    // sample at 0 and every realized value
    std::vector<std::uint64_t> xs;
    xs.push_back(0);
    for (auto d : values)
        if (d != xs.back()) xs.push_back(d);

    MetricCurve curve;
    const double n = static_cast<double>(values.size());
    for (auto x : xs) {
        auto above = values.end() - std::upper_bound(values.begin(), values.end(), x);
        curve.points.push_back({static_cast<double>(x), static_cast<double>(above) / n});
    }
    return curve;
}

MetricCurve triangle_ccdf(const UndirectedGraph& g) {
    return triangle_ccdf(g, triangle_coefficients(g));
}

MetricCurve delta_of_k_curve(const UndirectedGraph& g, const TriangleProfile& profile) {
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<std::uint64_t> sum(max_deg + 1, 0), cnt(max_deg + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        sum[g.degree(v)] += profile.delta[v];
        ++cnt[g.degree(v)];
    }
    MetricCurve curve;
    for (std::uint32_t k = 0; k <= max_deg; ++k)
        if (cnt[k] > 0)
            curve.points.push_back({static_cast<double>(k),
                                    static_cast<double>(sum[k]) / static_cast<double>(cnt[k])});
    return curve;
}

MetricCurve delta_of_k_curve(const UndirectedGraph& g) {
    return delta_of_k_curve(g, triangle_coefficients(g));
}

MetricCurve c_of_k_curve(const UndirectedGraph& g, const TriangleProfile& profile) {
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<double> sum(max_deg + 1, 0.0);
    std::vector<std::uint64_t> cnt(max_deg + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::uint64_t k = g.degree(v);
        if (k < 2) continue;
        sum[k] += static_cast<double>(profile.delta[v]) /
                  (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
        ++cnt[k];
    }
    MetricCurve curve;
    for (std::uint32_t k = 2; k <= max_deg; ++k)
        if (cnt[k] > 0)
            curve.points.push_back({static_cast<double>(k),
                                    sum[k] / static_cast<double>(cnt[k])});
    return curve;
}

MetricCurve c_of_k_curve(const UndirectedGraph& g) {
    return c_of_k_curve(g, clustering_coefficients(g));
}

namespace {

MetricCurve mean_by_degree(std::size_t n,
                           const std::function<std::uint32_t(NodeId)>& deg,
                           const std::vector<std::uint64_t>& value) {
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    for (NodeId v = 0; v < n; ++v) {
        auto& [sum, cnt] = acc[deg(v)];
        sum += static_cast<double>(value[v]);
        ++cnt;
    }
    MetricCurve curve;
    for (auto [k, sc] : acc)
        curve.points.push_back(
            {static_cast<double>(k), sc.first / static_cast<double>(sc.second)});
    return curve;
}

}  // namespace

MetricCurve delta_in_of_k_curve(const DirectedGraph& g,
                                const DirectedTriangleProfile& profile) {
    return mean_by_degree(
        g.node_count(), [&](NodeId v) { return g.in_degree(v); }, profile.delta_in);
}

MetricCurve delta_out_of_k_curve(const DirectedGraph& g,
                                 const DirectedTriangleProfile& profile) {
    return mean_by_degree(
        g.node_count(), [&](NodeId v) { return g.out_degree(v); }, profile.delta_out);
}

}  // namespace webtopo
