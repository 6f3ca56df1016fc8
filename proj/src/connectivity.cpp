#include "webtopo/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "webtopo/triangles.hpp"

namespace webtopo {

std::optional<double> MetricCurve::at(double x) const {
    auto it = std::lower_bound(points.begin(), points.end(), x,
                               [](const CurvePoint& p, double v) { return p.x < v; });
    if (it == points.end() || it->x != x) return std::nullopt;
    return it->y;
}

double JointDegreeDistribution::total() const {
    double s = 0.0;
    for (const auto& [kk, p] : entries) s += p;
    return s;
}

double JointDegreeDistribution::marginal(std::uint32_t k) const {
    double s = 0.0;
    for (auto it = entries.lower_bound({k, 0}); it != entries.end() && it->first.first == k; ++it)
        s += it->second;
    return s;
}

namespace {

// Count of nodes per realized degree, ascending by degree.
std::vector<std::pair<std::uint32_t, std::uint64_t>> degree_histogram(const UndirectedGraph& g) {
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<std::uint64_t> count(max_deg + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) ++count[g.degree(v)];
    std::vector<std::pair<std::uint32_t, std::uint64_t>> hist;
    for (std::uint32_t k = 0; k <= max_deg; ++k)
        if (count[k] > 0) hist.emplace_back(k, count[k]);
    return hist;
}

}  // namespace

MetricCurve degree_distribution(const UndirectedGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty network");
    MetricCurve curve;
    const double n = static_cast<double>(g.node_count());
    for (auto [k, c] : degree_histogram(g))
        curve.points.push_back({static_cast<double>(k), static_cast<double>(c) / n});
    return curve;
}

JointDegreeDistribution joint_degree_distribution(const UndirectedGraph& g) {
    if (g.link_count() == 0) throw std::invalid_argument("no links");
    JointDegreeDistribution jdd;
    const double w = 1.0 / (2.0 * static_cast<double>(g.link_count()));
    g.for_each_link([&](NodeId u, NodeId v) {
        std::uint32_t ku = g.degree(u), kv = g.degree(v);
        jdd.entries[{ku, kv}] += w;
        jdd.entries[{kv, ku}] += w;
    });
    return jdd;
}

MetricCurve knn_curve(const UndirectedGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty network");
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
    // Pool neighbour degrees over all endpoints at each degree class.
    std::vector<double> sum(max_deg + 1, 0.0);
    std::vector<std::uint64_t> endpoints(max_deg + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint32_t k = g.degree(v);
        if (k == 0) continue;
        double s = 0.0;
        for (NodeId u : g.adjacent(v)) s += g.degree(u);
        sum[k] += s;
        endpoints[k] += k;
    }
    MetricCurve curve;
    for (std::uint32_t k = 1; k <= max_deg; ++k)
        if (endpoints[k] > 0)
            curve.points.push_back({static_cast<double>(k),
                                    sum[k] / static_cast<double>(endpoints[k])});
    return curve;
}

std::optional<double> assortative_coefficient(const UndirectedGraph& g) {
    if (g.link_count() == 0) return std::nullopt;
    long double prod = 0, half_sum = 0, half_sq = 0;
    g.for_each_link([&](NodeId u, NodeId v) {
        const long double s = g.degree(u), d = g.degree(v);
        prod += s * d;
        half_sum += 0.5L * (s + d);
        half_sq += 0.5L * (s * s + d * d);
    });
    const long double L = static_cast<long double>(g.link_count());
    const long double mean = half_sum / L;
    const long double num = prod / L - mean * mean;
    const long double den = half_sq / L - mean * mean;
    // Degenerate when every endpoint degree is identical; the variance term
    // is then exactly zero up to rounding.
    if (den <= 0 || den < 1e-12L * (half_sq / L))
        return std::nullopt;
    return static_cast<double>(num / den);
}

MetricCurve rich_club_curve(const UndirectedGraph& g) {
    MetricCurve curve;
    if (g.node_count() < 2) return curve;

    auto hist = degree_histogram(g);
    std::uint32_t max_deg = hist.back().first;

    // nodes_above[k] = N_{>k}, links_above[k] = E_{>k}, both by suffix sums.
    std::vector<std::uint64_t> node_cnt(max_deg + 2, 0), link_cnt(max_deg + 2, 0);
    for (auto [k, c] : hist) node_cnt[k] = c;
    g.for_each_link([&](NodeId u, NodeId v) {
        ++link_cnt[std::min(g.degree(u), g.degree(v))];
    });
    std::vector<std::uint64_t> nodes_above(max_deg + 2, 0), links_above(max_deg + 2, 0);
    for (std::int64_t k = max_deg; k >= 0; --k) {
        nodes_above[k] = nodes_above[k + 1] + node_cnt[k + 1];
        links_above[k] = links_above[k + 1] + link_cnt[k + 1];
    }

    for (auto [k, c] : hist) {
        const std::uint64_t n_rich = nodes_above[k];
        if (n_rich < 2) continue;
        const double phi = 2.0 * static_cast<double>(links_above[k]) /
                           (static_cast<double>(n_rich) * static_cast<double>(n_rich - 1));
        curve.points.push_back({static_cast<double>(k), phi});
    }
    return curve;
}

NetworkSummary network_summary(const UndirectedGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty network");
    NetworkSummary s;
    s.nodes = g.node_count();
    s.links = g.link_count();
    s.average_degree = 2.0 * static_cast<double>(s.links) / static_cast<double>(s.nodes);
    s.assortative_coefficient = assortative_coefficient(g);

    auto profile = triangle_coefficients(g);
    std::uint64_t total = 0;
    for (auto d : profile.delta) total += d;
    s.mean_triangle_coefficient = static_cast<double>(total) / static_cast<double>(s.nodes);
    return s;
}

}  // namespace webtopo
