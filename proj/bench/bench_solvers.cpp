// Compares the OpenMP sector-blocked ground-state kernel against the serial
// full-matrix reference, and the parallel sweep against a single worker.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrainbow/exact.hpp"
#include "qrainbow/sweep.hpp"

using namespace qrainbow;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ChainSpec make_chain(int n_pairs) {
    ChainSpec spec;
    spec.n_pairs = n_pairs;
    double j = 1.0;
    for (int i = 0; i < n_pairs; ++i, j *= 0.3) {
        spec.J.push_back(j);
        spec.h.push_back(0.4 * j);
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    const int max_pairs = argc > 1 ? std::atoi(argv[1]) : 6;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled\n");
#endif

    std::printf("%-8s %-6s %14s %14s %8s\n", "kernel", "pairs", "serial_ref[s]",
                "blocked[s]", "speedup");
    for (int n = 4; n <= max_pairs; ++n) {
        const ChainSpec spec = make_chain(n);

        auto t0 = Clock::now();
        const auto ref = ground_state_reference(spec, std::size_t(1) << 16);
        const double t_ref = seconds_since(t0);

        t0 = Clock::now();
        const auto blk = ground_state(spec, {.size_cap = std::size_t(1) << 16});
        const double t_blk = seconds_since(t0);

        if (std::abs(ref.energy - blk.energy) > 1e-9) {
            std::printf("energy mismatch at N=%d: %.12f vs %.12f\n", n, ref.energy,
                        blk.energy);
            return 1;
        }
        std::printf("%-8s %-6d %14.4f %14.4f %7.2fx\n", "eigs", n, t_ref, t_blk,
                    t_ref / t_blk);
    }

    // Sweep throughput: fidelity grid on a 2-pair chain.
    SweepGrid grid;
    grid.mode = SweepMode::chain;
    grid.n_pairs = 2;
    grid.J = {1.0, 0.1};
    grid.h = {1.0, 0.0};
    grid.axes = {{"h2", -0.02, 0.02, 400, AxisScale::linear}};
    grid.columns = {"h2", "S_A2", "fidelity"};

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    auto t0 = Clock::now();
    const std::string serial_csv = run_sweep(grid);
    const double t_serial = seconds_since(t0);
    omp_set_num_threads(threads);
    t0 = Clock::now();
    const std::string parallel_csv = run_sweep(grid);
    const double t_parallel = seconds_since(t0);
    if (serial_csv != parallel_csv) {
        std::printf("sweep output differs between worker counts\n");
        return 1;
    }
    std::printf("%-8s %-6d %14.4f %14.4f %7.2fx\n", "sweep", 2, t_serial, t_parallel,
                t_serial / t_parallel);
#else
    auto t0 = Clock::now();
    run_sweep(grid);
    std::printf("%-8s %-6d %14.4f\n", "sweep", 2, seconds_since(t0));
#endif
    return 0;
}
