// Times the serial reference kernels against the OpenMP ones on the
// brute-force verification loops and checks that both return the same
// minima.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lmrd/construct.hpp"
#include "lmrd/kernels.hpp"
#include "lmrd/mrd.hpp"

namespace {

using clk = std::chrono::steady_clock;

double seconds_since(clk::time_point start) {
    return std::chrono::duration<double>(clk::now() - start).count();
}

template <class F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = clk::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    const lmrd::BigNat cap = 1 << 20;

    {
        const auto code = lmrd::build_multi({2, 8, 3, 2});  // 1089 subspaces, ~592k pairs
        const auto words = lmrd::enumerate_multi(code, cap);
        std::uint32_t d_serial = 0, d_parallel = 0;
        const double t_serial =
            time_best_of(3, [&] { d_serial = lmrd::kernels::min_pairwise_injection_distance_serial(words); });
        const double t_parallel =
            time_best_of(3, [&] { d_parallel = lmrd::kernels::min_pairwise_injection_distance(words); });
        std::printf("pairwise injection distance, %zu words: serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                    words.size(), t_serial, t_parallel, t_serial / t_parallel,
                    d_serial == d_parallel ? "results match" : "RESULTS DIFFER");
    }

    {
        const auto code = lmrd::build_mrd({2, 4, 4, 2});  // 4096 codewords
        const auto words = lmrd::enumerate_mrd(code, cap);
        std::uint32_t w_serial = 0, w_parallel = 0;
        const double t_serial = time_best_of(3, [&] { w_serial = lmrd::kernels::min_nonzero_rank_serial(words); });
        const double t_parallel = time_best_of(3, [&] { w_parallel = lmrd::kernels::min_nonzero_rank(words); });
        std::printf("min nonzero rank, %zu words: serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n", words.size(),
                    t_serial, t_parallel, t_serial / t_parallel,
                    w_serial == w_parallel ? "results match" : "RESULTS DIFFER");

        std::uint32_t p_serial = 0, p_parallel = 0;
        const double tp_serial =
            time_best_of(1, [&] { p_serial = lmrd::kernels::min_pairwise_rank_distance_serial(words); });
        const double tp_parallel =
            time_best_of(1, [&] { p_parallel = lmrd::kernels::min_pairwise_rank_distance(words); });
        std::printf("pairwise rank distance, %zu words: serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                    words.size(), tp_serial, tp_parallel, tp_serial / tp_parallel,
                    p_serial == p_parallel ? "results match" : "RESULTS DIFFER");
    }

    return 0;
}
