// bench -- times the parallel triangle kernels against the serial
// per-definition reference on synthetic graphs, and checks they agree.
//
// Usage: bench [max_nodes]   (default 65536; brute force capped at 16384)

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "webtopo/generate.hpp"
#include "webtopo/graph.hpp"
#include "webtopo/reference.hpp"
#include "webtopo/triangles.hpp"

using namespace webtopo;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now_seconds();
        f();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint32_t max_nodes = 65536;
    if (argc > 1) max_nodes = static_cast<std::uint32_t>(std::strtoul(argv[1], nullptr, 10));

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("triangle kernel benchmark (%d thread%s available)\n", threads,
                threads == 1 ? "" : "s");
    std::printf("%10s %10s %12s %12s %12s %9s\n", "nodes", "links", "brute(ms)",
                "serial(ms)", "parallel(ms)", "speedup");

    bool all_match = true;
    for (std::uint32_t n = 4096; n <= max_nodes; n *= 4) {
        const UndirectedGraph g = generate_ba({.n_final = n, .m = 8, .seed = 42});

        std::vector<std::uint64_t> par_delta, ser_delta;
        double par = 0.0, ser = 0.0;

#ifdef _OPENMP
        omp_set_num_threads(1);
#endif
        ser = time_best_of(3, [&] { ser_delta = triangle_coefficients(g).delta; });
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        par = time_best_of(3, [&] { par_delta = triangle_coefficients(g).delta; });

        double brute = -1.0;
        if (n <= 16384) {
            std::vector<std::uint64_t> brute_delta;
            brute = time_best_of(1, [&] { brute_delta = ref::triangle_coefficients(g); });
            if (brute_delta != par_delta) {
                std::printf("MISMATCH vs brute force at n=%u\n", n);
                all_match = false;
            }
        }
        if (ser_delta != par_delta) {
            std::printf("MISMATCH serial vs parallel at n=%u\n", n);
            all_match = false;
        }

        char brute_col[32];
        if (brute >= 0.0)
            std::snprintf(brute_col, sizeof brute_col, "%.1f", brute * 1e3);
        else
            std::snprintf(brute_col, sizeof brute_col, "-");
        std::printf("%10u %10llu %12s %12.1f %12.1f %8.2fx\n", n,
                    static_cast<unsigned long long>(g.link_count()), brute_col,
                    ser * 1e3, par * 1e3, par > 0.0 ? ser / par : 0.0);
    }

    std::printf(all_match ? "all configurations agree\n"
                          : "RESULT MISMATCH -- see above\n");
    return all_match ? 0 : 1;
}
