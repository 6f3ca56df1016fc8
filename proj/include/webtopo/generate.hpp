// generate.hpp -- synthetic baseline graphs: preferential-attachment growth
// and uniform random graphs. Both are deterministic under a fixed seed.

#pragma once

#include <cstdint>
#include <optional>

#include "webtopo/graph.hpp"

namespace webtopo {

struct BaParams {
    std::uint64_t n_final = 0;
    std::uint32_t m = 1;    // links added per new node
    std::uint32_t m0 = 0;   // seed ring size; 0 means "use m"
    std::uint64_t seed = 0;
};

struct ErParams {
    std::uint64_t n = 0;
    std::optional<double> p;                    // exactly one of p /
    std::optional<std::uint64_t> target_links;  // target_links must be set
    std::uint64_t seed = 0;
};

// Growth from a ring of m0 nodes; each new node attaches to m distinct
// existing nodes with probability proportional to current degree.
// L = ring links + m * (n_final - m0).
UndirectedGraph generate_ba(const BaParams& params);

// G(n,p) sampling, or exactly target_links distinct pairs drawn uniformly.
UndirectedGraph generate_er(const ErParams& params);

}  // namespace webtopo
