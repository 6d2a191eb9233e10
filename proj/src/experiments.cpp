#include "zeno/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeno/errors.hpp"
#include "zeno/evolutions.hpp"
#include "zeno/matfun.hpp"
#include "zeno/rng.hpp"

namespace zeno {

const char* protocol_name(Protocol p) { return p == Protocol::zeno ? "zeno" : "trotter"; }

std::vector<std::uint64_t> log_spaced_grid(std::uint64_t n_min, std::uint64_t n_max,
                                           int points_per_decade) {
    if (n_min == 0 || n_max < n_min || points_per_decade < 1)
        throw ConfigError("log_spaced_grid: bad range");
    std::vector<std::uint64_t> grid;
    const double lo = std::log10(static_cast<double>(n_min));
    const double hi = std::log10(static_cast<double>(n_max));
    const double step = 1.0 / points_per_decade;
    for (int k = 0;; ++k) {
        const double x = lo + step * k;
        if (x > hi + 1e-12) break;
        const auto n = static_cast<std::uint64_t>(std::llround(std::pow(10.0, x)));
        if (grid.empty() || n > grid.back()) grid.push_back(n);
    }
    if (grid.empty() || grid.back() < n_max) grid.push_back(n_max);
    return grid;
}

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig cfg;
    cfg.n_grid = log_spaced_grid(10, 1000000, 25);
    return cfg;
}

void ExperimentConfig::validate(Protocol protocol) const {
    if (dim == 0) throw ConfigError("config: dim must be positive");
    if (alphas.empty()) throw ConfigError("config: empty alpha list");
    if (seeds.empty() && !zero_hamiltonian) throw ConfigError("config: empty seed list");
    if (potential.size() != dim)
        throw ConfigError("config: potential eigenvalue count must equal dim");
    if (n_grid.size() < 2) throw ConfigError("config: need at least two grid points to fit");
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
        if (n_grid[i] >= n_grid[i + 1]) throw ConfigError("config: n_grid must be strictly increasing");
    if (n_grid.front() == 0) throw ConfigError("config: n must be positive");
    if (fit_min > fit_max || fit_min < n_grid.front() || fit_max > n_grid.back())
        throw ConfigError("config: fit window must lie inside the n grid");
    std::size_t in_window = 0;
    for (std::uint64_t n : n_grid)
        if (n >= fit_min && n <= fit_max) ++in_window;
    if (in_window < 2) throw ConfigError("config: fit window covers fewer than two grid points");

    for (double a : alphas) {
        if (!(a >= 0.0)) throw ConfigError("config: alpha must be nonnegative");
        if (protocol == Protocol::zeno) {
            if (a >= 1.0)
                throw ScheduleViolation(
                    "config: alpha >= 1 gives K_n >= n; the Zeno error needs K_n = o(n)");
        } else if (a > 1.0) {
            throw ConfigError("config: alpha must lie in [0, 1]");
        }
    }
}

ComplexMatrix random_hermitian(std::uint64_t seed, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("random_hermitian: dim must be positive");
    Xoshiro256 gen(seed);
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const double re = gen.uniform_pm1();
            const double im = gen.uniform_pm1();
            a(i, j) = cplx(re, im);
        }
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

ComplexMatrix diag_potential(std::span<const double> eigs) {
    if (eigs.empty()) throw std::invalid_argument("diag_potential: empty eigenvalue list");
    return ComplexMatrix::diagonal(eigs);
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t alpha_index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(alpha_index) + 1);
    return Xoshiro256::splitmix64(x);
}

namespace {

double point_epsilon(const ExperimentConfig& cfg, Protocol protocol, double alpha,
                     const ComplexMatrix& h, const ComplexMatrix& v, std::uint64_t n) {
    const ScalingSchedule schedule = ScalingSchedule::power(alpha);
    return protocol == Protocol::zeno
               ? intermediate_zeno_error(h, v, schedule, cfg.t, n)
               : generalized_trotter_error(h, v, schedule, cfg.t, n);
}

struct SweepPlan {
    std::vector<ConvergenceSeries> series;
    std::vector<ComplexMatrix> hamiltonians;  // one per series
    ComplexMatrix potential;
};

SweepPlan plan_sweep(const ExperimentConfig& cfg, Protocol protocol) {
    cfg.validate(protocol);
    SweepPlan plan;
    plan.potential = diag_potential(cfg.potential);

    std::vector<double> alphas = cfg.alphas;
    std::sort(alphas.begin(), alphas.end());
    std::vector<std::uint64_t> seeds = cfg.seeds.empty() ? std::vector<std::uint64_t>{0}
                                                         : cfg.seeds;
    std::sort(seeds.begin(), seeds.end());

    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        for (std::uint64_t seed : seeds) {
            ConvergenceSeries s;
            s.protocol = protocol;
            s.alpha = alphas[ai];
            s.seed = seed;
            s.points.reserve(cfg.n_grid.size());
            for (std::uint64_t n : cfg.n_grid) s.points.push_back({n, 0.0});
            plan.series.push_back(std::move(s));

            if (cfg.zero_hamiltonian) {
                plan.hamiltonians.emplace_back(cfg.dim);
            } else {
                const std::uint64_t draw =
                    cfg.hamiltonian_per_alpha ? derive_seed(seed, ai) : seed;
                plan.hamiltonians.push_back(random_hermitian(draw, cfg.dim));
            }
        }
    }
    return plan;
}

}  // namespace

std::vector<ConvergenceSeries> sweep_serial(const ExperimentConfig& cfg, Protocol protocol) {
    SweepPlan plan = plan_sweep(cfg, protocol);
    for (std::size_t s = 0; s < plan.series.size(); ++s) {
        ConvergenceSeries& series = plan.series[s];
        for (SeriesPoint& pt : series.points)
            pt.epsilon = point_epsilon(cfg, protocol, series.alpha, plan.hamiltonians[s],
                                       plan.potential, pt.n);
    }
    return std::move(plan.series);
}

std::vector<ConvergenceSeries> sweep(const ExperimentConfig& cfg, Protocol protocol, int threads) {
#ifndef _OPENMP
    (void)threads;
    return sweep_serial(cfg, protocol);
#else
    SweepPlan plan = plan_sweep(cfg, protocol);

    struct Task {
        std::size_t series;
        std::size_t point;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < plan.series.size(); ++s)
        for (std::size_t p = 0; p < plan.series[s].points.size(); ++p) tasks.push_back({s, p});

    // Each task owns one output slot, so the merge is deterministic no matter
    // how the schedule distributes the work.
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    const int want = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(want)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            ConvergenceSeries& series = plan.series[tasks[i].series];
            SeriesPoint& pt = series.points[tasks[i].point];
            pt.epsilon = point_epsilon(cfg, protocol, series.alpha,
                                       plan.hamiltonians[tasks[i].series], plan.potential, pt.n);
        } catch (...) {
#pragma omp critical(zeno_sweep_error)
            {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return std::move(plan.series);
#endif
}

PowerLawFit loglog_fit(const ConvergenceSeries& series, std::uint64_t n_min, std::uint64_t n_max) {
    std::vector<double> xs, ys;
    for (const SeriesPoint& pt : series.points) {
        if (pt.n < n_min || pt.n > n_max) continue;
        if (!(pt.epsilon > 0.0))
            throw NonpositiveValues("loglog_fit: nonpositive epsilon inside the fit window");
        xs.push_back(std::log10(static_cast<double>(pt.n)));
        ys.push_back(std::log10(pt.epsilon));
    }
    if (xs.size() < 2) throw InsufficientPoints("loglog_fit: fewer than two points in window");

    const double count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw InsufficientPoints("loglog_fit: window collapses to one abscissa");

    PowerLawFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.n_min = n_min;
    fit.n_max = n_max;
    fit.point_count = xs.size();
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / count);
    return fit;
}

bool is_degenerate(const ConvergenceSeries& series) {
    for (const SeriesPoint& pt : series.points)
        if (pt.epsilon > kDegenerateEpsilon) return false;
    return true;
}

std::vector<BetaPoint> beta_curve(const ExperimentConfig& cfg, int threads) {
    const std::vector<ConvergenceSeries> series = sweep(cfg, Protocol::trotter, threads);
    std::vector<BetaPoint> rows;
    rows.reserve(series.size());
    for (const ConvergenceSeries& s : series) {
        BetaPoint row;
        row.alpha = s.alpha;
        row.seed = s.seed;
        if (is_degenerate(s)) {
            row.degenerate = true;
        } else {
            row.fit = loglog_fit(s, cfg.fit_min, cfg.fit_max);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ResonancePoint> resonance_demo(const ComplexMatrix& h,
                                           std::span<const std::uint64_t> n_list) {
    const std::size_t dim = h.dim();
    const std::size_t plus = (dim + 1) / 2;
    std::vector<double> eigs(dim, -1.0);
    for (std::size_t i = 0; i < plus; ++i) eigs[i] = 1.0;
    const ComplexMatrix v = diag_potential(eigs);

    const double t = std::numbers::pi / 2.0;
    const ComplexMatrix target = expm_hermitian(h, t);

    // Quarter turns: (cos, sin) of (n mod 4) * pi/2, exactly.
    static constexpr double qc[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double qs[4] = {0.0, 1.0, 0.0, -1.0};

    std::vector<ResonancePoint> out;
    out.reserve(n_list.size());
    for (std::uint64_t n : n_list) {
        if (n == 0) throw std::invalid_argument("resonance_demo: n must be positive");
        const int quarter = static_cast<int>(n % 4);
        ComplexMatrix kick(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const double lam = v(i, i).real();
            kick(i, i) = cplx(qc[quarter], -qs[quarter] * lam);  // e^{-i (n pi/2) lam}
        }
        const ComplexMatrix step = kick * expm_hermitian(h, t / static_cast<double>(n));
        const ComplexMatrix forward = unitary_power(step, n);
        out.push_back({n, n % 2 == 0, hs_distance(forward, target)});
    }
    return out;
}

}  // namespace zeno
