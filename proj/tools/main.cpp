// zenoprod: sweeps, fits and closed-form checks for product-formula
// convergence experiments. Subcommands write plot-ready CSV plus a JSON
// manifest; single-shot evaluators print to stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zeno/errors.hpp"
#include "zeno/experiments.hpp"
#include "zeno/qubit.hpp"
#include "zeno/report.hpp"
#include "zeno/rng.hpp"
#include "zeno/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSchedule = 3;
constexpr int kExitIo = 4;

zeno::ExperimentConfig preset_config(const std::string& name) {
    using zeno::ExperimentConfig;
    if (name.empty() || name == "paper-fig4" || name == "paper-fig5") {
        return ExperimentConfig::defaults();
    }
    if (name == "paper-fig6") {
        ExperimentConfig cfg = ExperimentConfig::defaults();
        cfg.alphas.clear();
        for (int k = 0; k <= 20; ++k) cfg.alphas.push_back(0.05 * k);
        cfg.n_grid = zeno::log_spaced_grid(10000, 1000000, 25);
        cfg.fit_min = 10000;
        cfg.fit_max = 1000000;
        cfg.seeds.clear();
        for (std::uint64_t s = 0; s < 10; ++s) cfg.seeds.push_back(s);
        return cfg;
    }
    throw zeno::ConfigError("unknown preset: " + name);
}

void merge_config_file(zeno::ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw zeno::ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw zeno::ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        if (j.contains("dim")) cfg.dim = j["dim"].get<std::size_t>();
        if (j.contains("t")) cfg.t = j["t"].get<double>();
        if (j.contains("alphas")) cfg.alphas = j["alphas"].get<std::vector<double>>();
        if (j.contains("n_grid")) {
            const json& g = j["n_grid"];
            if (g.is_array()) {
                cfg.n_grid = g.get<std::vector<std::uint64_t>>();
            } else {
                cfg.n_grid = zeno::log_spaced_grid(g.at("min").get<std::uint64_t>(),
                                                   g.at("max").get<std::uint64_t>(),
                                                   g.value("points_per_decade", 25));
            }
        }
        if (j.contains("fit_window")) {
            cfg.fit_min = j["fit_window"].at(0).get<std::uint64_t>();
            cfg.fit_max = j["fit_window"].at(1).get<std::uint64_t>();
        }
        if (j.contains("seeds")) cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
        if (j.contains("potential")) cfg.potential = j["potential"].get<std::vector<double>>();
        if (j.contains("hamiltonian")) {
            const std::string kind = j["hamiltonian"].get<std::string>();
            if (kind == "zero")
                cfg.zero_hamiltonian = true;
            else if (kind == "random")
                cfg.zero_hamiltonian = false;
            else
                throw zeno::ConfigError("hamiltonian must be \"random\" or \"zero\"");
        }
        if (j.contains("hamiltonian_per_alpha"))
            cfg.hamiltonian_per_alpha = j["hamiltonian_per_alpha"].get<bool>();
    } catch (const json::exception& e) {
        throw zeno::ConfigError(std::string("config field error: ") + e.what());
    }
}

json config_json(const zeno::ExperimentConfig& cfg) {
    json j;
    j["dim"] = cfg.dim;
    j["t"] = cfg.t;
    j["alphas"] = cfg.alphas;
    j["n_grid"] = cfg.n_grid;
    j["fit_window"] = {cfg.fit_min, cfg.fit_max};
    j["seeds"] = cfg.seeds;
    j["potential"] = cfg.potential;
    j["hamiltonian"] = cfg.zero_hamiltonian ? "zero" : "random";
    j["hamiltonian_per_alpha"] = cfg.hamiltonian_per_alpha;
    return j;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path.string());
    out << text;
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

void write_manifest(const fs::path& out_dir, const zeno::ExperimentConfig& cfg,
                    const std::vector<std::string>& outputs) {
    json manifest;
    manifest["config_hash"] = zeno::hex64(zeno::fnv1a64(config_json(cfg).dump()));
    manifest["tool_version"] = zeno::kToolVersion;
    manifest["timestamp"] = utc_timestamp();
    manifest["output_paths"] = outputs;
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

struct SweepArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string preset;
    int seeds = -1;
    int threads = 0;
};

zeno::ExperimentConfig resolve_config(const SweepArgs& args) {
    zeno::ExperimentConfig cfg = preset_config(args.preset);
    if (!args.config_path.empty()) merge_config_file(cfg, args.config_path);
    if (args.seeds >= 0) {
        cfg.seeds.clear();
        for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(args.seeds); ++s)
            cfg.seeds.push_back(s);
    }
    return cfg;
}

int run_sweep_command(const SweepArgs& args, zeno::Protocol protocol, const char* stem) {
    const zeno::ExperimentConfig cfg = resolve_config(args);
    cfg.validate(protocol);

    const std::vector<zeno::ConvergenceSeries> series =
        zeno::sweep(cfg, protocol, args.threads);

    std::vector<zeno::FitRow> fits;
    fits.reserve(series.size());
    for (const zeno::ConvergenceSeries& s : series) {
        zeno::FitRow row{s.protocol, s.alpha, s.seed, false, {}};
        row.fit.n_min = cfg.fit_min;
        row.fit.n_max = cfg.fit_max;
        if (zeno::is_degenerate(s)) {
            row.degenerate = true;
            std::fprintf(stderr, "series %s alpha=%g seed=%llu: degenerate (all eps <= %g)\n",
                         zeno::protocol_name(s.protocol), s.alpha,
                         static_cast<unsigned long long>(s.seed), zeno::kDegenerateEpsilon);
        } else {
            row.fit = zeno::loglog_fit(s, cfg.fit_min, cfg.fit_max);
            std::fprintf(stderr, "series %s alpha=%g seed=%llu: slope %.4f over [%llu, %llu]\n",
                         zeno::protocol_name(s.protocol), s.alpha,
                         static_cast<unsigned long long>(s.seed), row.fit.slope,
                         static_cast<unsigned long long>(cfg.fit_min),
                         static_cast<unsigned long long>(cfg.fit_max));
        }
        fits.push_back(row);
    }

    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);
    const std::string series_name = std::string(stem) + "_series.csv";
    const std::string fits_name = std::string(stem) + "_fits.csv";
    write_file(out_dir / series_name, zeno::series_csv(series));
    write_file(out_dir / fits_name, zeno::fit_csv(fits));
    write_manifest(out_dir, cfg, {series_name, fits_name});
    return kExitOk;
}

int run_beta_curve(const SweepArgs& args) {
    SweepArgs local = args;
    if (local.preset.empty() && local.config_path.empty()) local.preset = "paper-fig6";
    const zeno::ExperimentConfig cfg = resolve_config(local);
    cfg.validate(zeno::Protocol::trotter);

    const std::vector<zeno::ConvergenceSeries> series =
        zeno::sweep(cfg, zeno::Protocol::trotter, local.threads);
    std::vector<zeno::BetaPoint> rows;
    rows.reserve(series.size());
    for (const zeno::ConvergenceSeries& s : series) {
        zeno::BetaPoint row;
        row.alpha = s.alpha;
        row.seed = s.seed;
        if (zeno::is_degenerate(s)) {
            row.degenerate = true;
            row.fit.n_min = cfg.fit_min;
            row.fit.n_max = cfg.fit_max;
        } else {
            row.fit = zeno::loglog_fit(s, cfg.fit_min, cfg.fit_max);
        }
        std::fprintf(stderr, "beta alpha=%g seed=%llu: %s\n", row.alpha,
                     static_cast<unsigned long long>(row.seed),
                     row.degenerate ? "degenerate" : std::to_string(row.fit.slope).c_str());
        rows.push_back(row);
    }

    const fs::path out_dir(local.out_dir);
    fs::create_directories(out_dir);
    const std::vector<zeno::FitRow> fits = zeno::fit_rows_from_beta(rows);
    write_file(out_dir / "beta_series.csv", zeno::series_csv(series));
    write_file(out_dir / "beta_curve.csv", zeno::fit_csv(fits));
    write_manifest(out_dir, cfg, {"beta_series.csv", "beta_curve.csv"});
    return kExitOk;
}

int run_qubit_check(double alpha, std::uint64_t n_max) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        std::fprintf(stderr, "qubit-check: alpha must lie in [0, 1)\n");
        return kExitConfig;
    }
    if (n_max < 10) {
        std::fprintf(stderr, "qubit-check: n-max must be at least 10\n");
        return kExitConfig;
    }

    std::printf("%12s %14s %14s %16s %14s\n", "n", "|U-V|", "n|U-V|", "phi-n*theta",
                "|u-v|");
    for (std::uint64_t n = 10; n <= n_max; n *= 10) {
        const zeno::qubit::QubitDiff diff = zeno::qubit::qubit_diff(n, alpha);
        const double axis_gap = std::sqrt(diff.axis_gap[0] * diff.axis_gap[0] +
                                          diff.axis_gap[1] * diff.axis_gap[1] +
                                          diff.axis_gap[2] * diff.axis_gap[2]);
        std::printf("%12llu %14.6e %14.6e %16.8e %14.6e\n",
                    static_cast<unsigned long long>(n), diff.hs_error,
                    static_cast<double>(n) * diff.hs_error, diff.phase_gap, axis_gap);
    }

    const std::uint64_t n = n_max;
    const zeno::qubit::QubitDiff diff = zeno::qubit::qubit_diff(n, alpha);
    const zeno::qubit::QubitTarget target = zeno::qubit::qubit_target(n, alpha);

    // Exact leading constants from the closed form, valid down to the
    // n^alpha = 1 branch at alpha = 0:
    //   phi - n*theta   ->  x^2 / (6 n^2 sqrt(x^2+1)),
    //   n * (u - v)_y   ->  x / sqrt(x^2+1),         with x = n^alpha.
    // For n^alpha >> 1 both reduce to the familiar n^{alpha-2}/6 and 1.
    const double nn = static_cast<double>(n);
    const double x = std::pow(nn, alpha);
    const double phase_ratio = diff.phase_gap * 6.0 * nn * nn * target.phi / (x * x);
    const double axis_ratio = nn * diff.axis_gap[1] * target.phi / x;
    zeno::ComplexMatrix resid = nn * diff.difference;
    resid += zeno::cplx(0.0, std::sin(target.phi) * x / target.phi) * zeno::qubit::pauli_y();
    const double resid_norm = zeno::hs_norm(resid);

    int failures = 0;
    const auto report = [&failures](const char* name, double value, bool ok) {
        std::printf("%s: %.6f [%s]\n", name, value, ok ? "pass" : "FAIL");
        if (!ok) ++failures;
    };
    report("phase gap ratio (phi - n*theta) * 6 n^2 phi / x^2 -> 1", phase_ratio,
           std::abs(phase_ratio - 1.0) <= 0.05);
    report("axis gap ratio n*(u-v)_y * phi / x -> 1", axis_ratio,
           std::abs(axis_ratio - 1.0) <= 0.05);
    report("leading-order residual |n(U-V) + i sin(phi) (x/phi) Y|", resid_norm,
           resid_norm <= 0.1);
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_resonance_demo(std::uint64_t seed, std::uint64_t n_max, bool commuting,
                       std::size_t dim) {
    if (n_max < 2) {
        std::fprintf(stderr, "resonance-demo: n-max must be at least 2\n");
        return kExitConfig;
    }
    zeno::ComplexMatrix h;
    if (commuting) {
        // Diagonal H commutes with the internal diagonal potential.
        zeno::Xoshiro256 gen(seed);
        std::vector<double> diag(dim);
        for (double& d : diag) d = gen.uniform_pm1();
        h = zeno::ComplexMatrix::diagonal(diag);
    } else {
        h = zeno::random_hermitian(seed, dim);
    }

    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= n_max; ++n) ns.push_back(n);
    const std::vector<zeno::ResonancePoint> points = zeno::resonance_demo(h, ns);

    std::printf("%8s %6s %14s\n", "n", "parity", "deviation");
    for (const zeno::ResonancePoint& pt : points)
        std::printf("%8llu %6s %14.6e\n", static_cast<unsigned long long>(pt.n),
                    pt.even ? "even" : "odd", pt.deviation);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"product-formula convergence toolkit"};
    app.require_subcommand(1);

    SweepArgs zeno_args, trotter_args, beta_args;
    const auto add_sweep_flags = [](CLI::App* cmd, SweepArgs& args) {
        cmd->add_option("--config", args.config_path, "JSON configuration file");
        cmd->add_option("--out", args.out_dir, "output directory");
        cmd->add_option("--preset", args.preset,
                        "paper-fig4 | paper-fig5 | paper-fig6");
        cmd->add_option("--seeds", args.seeds, "use seeds 0..N-1");
        cmd->add_option("--threads", args.threads, "worker threads (0: runtime default)");
    };
    add_sweep_flags(app.add_subcommand("zeno-sweep", "Zeno-error sweep over (alpha, seed, n)"),
                    zeno_args);
    add_sweep_flags(
        app.add_subcommand("trotter-sweep", "Trotter-error sweep over (alpha, seed, n)"),
        trotter_args);
    add_sweep_flags(app.add_subcommand("beta-curve", "fitted exponent beta as a function of alpha"),
                    beta_args);

    double qc_alpha = 0.5;
    std::uint64_t qc_nmax = 1000000;
    CLI::App* qubit_cmd = app.add_subcommand("qubit-check", "closed-form two-level checks");
    qubit_cmd->add_option("--alpha", qc_alpha, "scaling exponent in [0, 1)");
    qubit_cmd->add_option("--n-max", qc_nmax, "largest step count (decade table up to here)");

    std::uint64_t rd_seed = 0, rd_nmax = 64;
    bool rd_commuting = false;
    std::size_t rd_dim = 5;
    CLI::App* res_cmd = app.add_subcommand("resonance-demo", "even/odd split at K_n = n^2");
    res_cmd->add_option("--seed", rd_seed, "seed of the random Hamiltonian");
    res_cmd->add_option("--n-max", rd_nmax, "evaluate n = 1..n_max");
    res_cmd->add_option("--dim", rd_dim, "matrix dimension");
    res_cmd->add_flag("--commuting", rd_commuting, "use a diagonal (commuting) Hamiltonian");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (app.got_subcommand("zeno-sweep"))
            return run_sweep_command(zeno_args, zeno::Protocol::zeno, "zeno");
        if (app.got_subcommand("trotter-sweep"))
            return run_sweep_command(trotter_args, zeno::Protocol::trotter, "trotter");
        if (app.got_subcommand("beta-curve")) return run_beta_curve(beta_args);
        if (app.got_subcommand("qubit-check")) return run_qubit_check(qc_alpha, qc_nmax);
        if (app.got_subcommand("resonance-demo"))
            return run_resonance_demo(rd_seed, rd_nmax, rd_commuting, rd_dim);
    } catch (const zeno::ScheduleViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSchedule;
    } catch (const zeno::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const zeno::InsufficientPoints& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
