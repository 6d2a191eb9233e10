// Times the serial reference sweep against the OpenMP task sweep on the same
// configuration and verifies that both produce identical numbers.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeno/experiments.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool identical(const std::vector<zeno::ConvergenceSeries>& a,
               const std::vector<zeno::ConvergenceSeries>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].alpha != b[s].alpha || a[s].seed != b[s].seed) return false;
        if (a[s].points.size() != b[s].points.size()) return false;
        for (std::size_t p = 0; p < a[s].points.size(); ++p) {
            if (a[s].points[p].n != b[s].points[p].n) return false;
            if (a[s].points[p].epsilon != b[s].points[p].epsilon) return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 0;
    if (argc > 1) threads = std::atoi(argv[1]);
#ifdef _OPENMP
    const int max_threads = threads > 0 ? threads : omp_get_max_threads();
#else
    const int max_threads = 1;
    std::puts("built without OpenMP; the parallel path degrades to serial");
#endif

    zeno::ExperimentConfig cfg = zeno::ExperimentConfig::defaults();
    cfg.alphas = {0.3, 0.5, 0.8};
    cfg.seeds = {0, 1, 2, 3};
    cfg.n_grid = zeno::log_spaced_grid(10, 100000, 12);
    cfg.fit_min = 10000;
    cfg.fit_max = 100000;

    for (const zeno::Protocol protocol : {zeno::Protocol::zeno, zeno::Protocol::trotter}) {
        const auto t0 = Clock::now();
        const auto serial = zeno::sweep_serial(cfg, protocol);
        const double serial_s = seconds_since(t0);

        const auto t1 = Clock::now();
        const auto parallel = zeno::sweep(cfg, protocol, max_threads);
        const double parallel_s = seconds_since(t1);

        const bool same = identical(serial, parallel);
        std::printf("%-8s serial %.3fs | omp(%d) %.3fs | speedup %.2fx | outputs %s\n",
                    zeno::protocol_name(protocol), serial_s, max_threads, parallel_s,
                    serial_s / parallel_s, same ? "identical" : "DIFFER");
        if (!same) return 1;
    }
    return 0;
}
