#include "zeno/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zeno {

std::string format_sci17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string format_shortest(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string series_csv(std::span<const ConvergenceSeries> series) {
    std::string out = "protocol,alpha,seed,n,epsilon\n";
    for (const ConvergenceSeries& s : series)
        for (const SeriesPoint& pt : s.points) {
            out += protocol_name(s.protocol);
            out += ',';
            out += format_shortest(s.alpha);
            out += ',';
            out += std::to_string(s.seed);
            out += ',';
            out += std::to_string(pt.n);
            out += ',';
            out += format_sci17(pt.epsilon);
            out += '\n';
        }
    return out;
}

std::string fit_csv(std::span<const FitRow> rows) {
    std::string out = "protocol,alpha,seed,beta,intercept,rms_residual,n_min,n_max\n";
    for (const FitRow& row : rows) {
        out += protocol_name(row.protocol);
        out += ',';
        out += format_shortest(row.alpha);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        if (row.degenerate) {
            out += "degenerate,degenerate,degenerate,";
        } else {
            out += format_sci17(row.fit.slope);
            out += ',';
            out += format_sci17(row.fit.intercept);
            out += ',';
            out += format_sci17(row.fit.rms_residual);
            out += ',';
        }
        out += std::to_string(row.fit.n_min);
        out += ',';
        out += std::to_string(row.fit.n_max);
        out += '\n';
    }
    return out;
}

std::vector<FitRow> fit_rows_from_beta(std::span<const BetaPoint> rows) {
    std::vector<FitRow> out;
    out.reserve(rows.size());
    for (const BetaPoint& b : rows)
        out.push_back({Protocol::trotter, b.alpha, b.seed, b.degenerate, b.fit});
    return out;
}

std::vector<ConvergenceSeries> parse_series_csv(const std::string& text) {
    std::vector<ConvergenceSeries> series;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {  // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string proto, alpha_s, seed_s, n_s, eps_s;
        if (!std::getline(row, proto, ',') || !std::getline(row, alpha_s, ',') ||
            !std::getline(row, seed_s, ',') || !std::getline(row, n_s, ',') ||
            !std::getline(row, eps_s))
            throw std::runtime_error("parse_series_csv: malformed row: " + line);

        const Protocol p = proto == "zeno" ? Protocol::zeno : Protocol::trotter;
        const double alpha = std::stod(alpha_s);
        const std::uint64_t seed = std::stoull(seed_s);
        if (series.empty() || series.back().alpha != alpha || series.back().seed != seed ||
            series.back().protocol != p) {
            series.push_back({p, alpha, seed, {}});
        }
        series.back().points.push_back({std::stoull(n_s), std::stod(eps_s)});
    }
    return series;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace zeno
