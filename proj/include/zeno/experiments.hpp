#ifndef ZENO_EXPERIMENTS_HPP
#define ZENO_EXPERIMENTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zeno/complex_matrix.hpp"

namespace zeno {

enum class Protocol { zeno, trotter };
const char* protocol_name(Protocol p);

// Log-spaced integer grid, deduplicated after rounding.
std::vector<std::uint64_t> log_spaced_grid(std::uint64_t n_min, std::uint64_t n_max,
                                           int points_per_decade);

struct ExperimentConfig {
    std::size_t dim = 5;
    double t = 1.0;
    std::vector<double> alphas{0.3, 0.5, 0.8};
    std::vector<std::uint64_t> n_grid;  // strictly increasing
    std::uint64_t fit_min = 100000;
    std::uint64_t fit_max = 1000000;
    std::vector<std::uint64_t> seeds{0, 1, 2};
    std::vector<double> potential{1, 1, 0, 0, 0};  // eigenvalues of the diagonal V
    bool zero_hamiltonian = false;                 // H = 0 instead of a random draw
    bool hamiltonian_per_alpha = false;            // fresh H per (seed, alpha) pair

    // Grid 10..1e6 at 25 points per decade, fit over the last decade.
    static ExperimentConfig defaults();

    // Structural checks; throws ConfigError. For the Zeno protocol an alpha
    // with n^alpha >= n is a ScheduleViolation instead (the o(n) hypothesis).
    void validate(Protocol protocol) const;
};

struct SeriesPoint {
    std::uint64_t n;
    double epsilon;
};

struct ConvergenceSeries {
    Protocol protocol;
    double alpha;
    std::uint64_t seed;
    std::vector<SeriesPoint> points;  // n ascending
};

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    double rms_residual = 0.0;
    std::size_t point_count = 0;
};

// Uniform entries on [-1,1) for real and imaginary parts, then (A+A')/2.
// Bit-identical for equal seeds; Hermitian exactly.
ComplexMatrix random_hermitian(std::uint64_t seed, std::size_t dim);

ComplexMatrix diag_potential(std::span<const double> eigs);

// Deterministic per-(seed, alpha-index) derivation for hamiltonian_per_alpha.
std::uint64_t derive_seed(std::uint64_t seed, std::size_t alpha_index);

// One series per (alpha, seed), sorted by (alpha, seed), points by n.
// The parallel version distributes (series, point) tasks over OpenMP threads;
// its output does not depend on the thread count (threads <= 0: runtime
// default). sweep_serial is the plain-loop reference the tests compare
// against.
std::vector<ConvergenceSeries> sweep(const ExperimentConfig& config, Protocol protocol,
                                     int threads = 0);
std::vector<ConvergenceSeries> sweep_serial(const ExperimentConfig& config, Protocol protocol);

// Ordinary least squares on (log10 n, log10 eps) restricted to [n_min, n_max].
// Throws InsufficientPoints (< 2 points) or NonpositiveValues (eps <= 0).
PowerLawFit loglog_fit(const ConvergenceSeries& series, std::uint64_t n_min, std::uint64_t n_max);

// Every epsilon at or below this floor marks a commuting/zero instance whose
// fit carries no information. Genuine decays never dip below ~1e-7 on the
// supported grids, while commuting instances bottom out near product
// roundoff, below 1e-10 even at n = 10^6.
constexpr double kDegenerateEpsilon = 1e-10;
bool is_degenerate(const ConvergenceSeries& series);

struct BetaPoint {
    double alpha;
    std::uint64_t seed;
    bool degenerate = false;
    PowerLawFit fit;
};

// The trotter exponent table: sweep + fit per (alpha, seed), rows sorted by
// (alpha, seed).
std::vector<BetaPoint> beta_curve(const ExperimentConfig& config, int threads = 0);

struct ResonancePoint {
    std::uint64_t n;
    bool even = false;
    double deviation = 0.0;
};

// The K_n = n^2, t = pi/2 counterexample with the internal two-block potential
// V = diag(1,..,1,-1,..,-1), V^2 = I. The kick phase n*pi/2 is reduced modulo
// 2*pi exactly (V has integer spectrum), so the even-n collapse onto
// e^{-i pi H/2} is clean down to product roundoff.
std::vector<ResonancePoint> resonance_demo(const ComplexMatrix& h,
                                           std::span<const std::uint64_t> n_list);

}  // namespace zeno

#endif
