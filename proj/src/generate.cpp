#include "webtopo/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace webtopo {

namespace {

// Unbiased uniform draw from [0, n); rejection keeps it portable across
// standard library implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % n;
}

inline double uniform_unit(std::mt19937_64& rng) {
    // 53-bit mantissa draw in [0,1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

UndirectedGraph generate_ba(const BaParams& params) {
    const std::uint32_t m = params.m;
    const std::uint32_t m0 = params.m0 == 0 ? m : params.m0;
    if (m < 1 || m0 < m || params.n_final <= m0)
        throw std::invalid_argument("preferential attachment requires n_final > m0 >= m >= 1");
    const std::size_t n = static_cast<std::size_t>(params.n_final);

    std::mt19937_64 rng(params.seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m0 + static_cast<std::size_t>(m) * (n - m0));

    // Every edge endpoint lands in this multiset, so a uniform draw from it
    // is a degree-proportional draw.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    auto add_edge = [&](NodeId u, NodeId v) {
        edges.emplace_back(u, v);
        endpoints.push_back(u);
        endpoints.push_back(v);
    };

    // connected seed: a ring (single link for m0 = 2, lone node for m0 = 1)
    if (m0 == 2) add_edge(0, 1);
    else if (m0 >= 3)
        for (NodeId i = 0; i < m0; ++i) add_edge(i, (i + 1) % m0);

    std::vector<NodeId> chosen;
    for (NodeId v = static_cast<NodeId>(m0); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            // draw-and-reject keeps the m targets distinct
            NodeId cand = endpoints.empty()
                              ? static_cast<NodeId>(uniform_index(rng, v))
                              : endpoints[uniform_index(rng, endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
                chosen.push_back(cand);
        }
        for (NodeId u : chosen) add_edge(u, v);
    }
    return UndirectedGraph::from_arcs(n, std::move(edges));
}

UndirectedGraph generate_er(const ErParams& params) {
    if (params.p.has_value() == params.target_links.has_value())
        throw std::invalid_argument("set exactly one of p / target_links");
    const std::uint64_t n = params.n;
    const std::uint64_t max_links = n < 2 ? 0 : n * (n - 1) / 2;
    std::mt19937_64 rng(params.seed);

    std::vector<std::pair<NodeId, NodeId>> edges;

    if (params.p) {
        const double p = *params.p;
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
        if (p > 0.0 && n >= 2) {
            // walk the linearized strict upper triangle, skipping
            // geometrically between successful pairs
            const double log_q = std::log1p(-p);  // -inf for p = 1
            std::uint64_t row = 0;   // current row
            std::uint64_t pos = 0;   // position within the row's tail
            std::uint64_t left = max_links;
            while (left > 0) {
                std::uint64_t skip = 0;
                if (p < 1.0) {
                    const double u = 1.0 - uniform_unit(rng);  // (0,1]
                    const double s = std::floor(std::log(u) / log_q);
                    if (s >= static_cast<double>(left)) break;
                    skip = static_cast<std::uint64_t>(s);
                }
                left -= skip + 1;
                while (pos + skip >= n - 1 - row) {
                    skip -= n - 1 - row - pos;
                    pos = 0;
                    ++row;
                }
                pos += skip;
                edges.emplace_back(static_cast<NodeId>(row),
                                   static_cast<NodeId>(row + 1 + pos));
                ++pos;
                if (pos == n - 1 - row) { pos = 0; ++row; }
            }
        }
    } else {
        const std::uint64_t target = *params.target_links;
        if (target > max_links)
            throw std::invalid_argument("target_links exceeds n(n-1)/2");
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(target * 2);
        while (seen.size() < target) {
            const std::uint64_t u = uniform_index(rng, n);
            const std::uint64_t v = uniform_index(rng, n);
            if (u == v) continue;
            const std::uint64_t key = (std::min(u, v) << 32) | std::max(u, v);
            if (seen.insert(key).second)
                edges.emplace_back(static_cast<NodeId>(std::min(u, v)),
                                   static_cast<NodeId>(std::max(u, v)));
        }
    }
    return UndirectedGraph::from_arcs(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace webtopo
