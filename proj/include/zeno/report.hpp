#ifndef ZENO_REPORT_HPP
#define ZENO_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/experiments.hpp"

namespace zeno {

// Scientific notation with 17 significant digits; round-trips any double.
std::string format_sci17(double x);
// Shortest representation that round-trips (used for alpha columns).
std::string format_shortest(double x);

// protocol,alpha,seed,n,epsilon
std::string series_csv(std::span<const ConvergenceSeries> series);

struct FitRow {
    Protocol protocol;
    double alpha;
    std::uint64_t seed;
    bool degenerate = false;
    PowerLawFit fit;
};

// protocol,alpha,seed,beta,intercept,rms_residual,n_min,n_max
// Degenerate rows carry the word "degenerate" in the numeric fit columns.
std::string fit_csv(std::span<const FitRow> rows);

std::vector<FitRow> fit_rows_from_beta(std::span<const BetaPoint> rows);

// Inverse of series_csv; used by the round-trip checks.
std::vector<ConvergenceSeries> parse_series_csv(const std::string& text);

// FNV-1a, for the manifest's configuration digest.
std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t value);

}  // namespace zeno

#endif
