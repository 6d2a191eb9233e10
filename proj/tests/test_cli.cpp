#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zeno/experiments.hpp"
#include "zeno/report.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "zenoprod_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const std::string cmd =
        std::string(ZENOPROD_BIN) + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    result.stdout_text = buf.str();
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_config(const fs::path& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

const char* kSmallConfig = R"({
  "dim": 5,
  "t": 1.0,
  "alphas": [0.3, 0.8],
  "n_grid": {"min": 100, "max": 10000, "points_per_decade": 8},
  "fit_window": [1000, 10000],
  "seeds": [0, 1],
  "potential": [1, 1, 0, 0, 0]
})";

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("zeno-sweep writes series, fits and manifest") {
    const fs::path dir = work_dir() / "zeno_basic";
    const fs::path cfg = work_dir() / "small.json";
    write_config(cfg, kSmallConfig);

    const RunResult r =
        run_cli("zeno-sweep --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);

    const std::string series_text = slurp(dir / "zeno_series.csv");
    const auto series = zeno::parse_series_csv(series_text);
    REQUIRE(series.size() == 4);  // 2 alphas x 2 seeds
    CHECK(series[0].alpha == 0.3);
    CHECK(series[0].points.size() == 17);

    const std::string fits_text = slurp(dir / "zeno_fits.csv");
    CHECK(count_lines(fits_text) == 5);  // header + 4 rows

    const std::string manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("config_hash") != std::string::npos);
    CHECK(manifest.find("zeno_series.csv") != std::string::npos);
}

TEST_CASE("round-trip: refitting the emitted series reproduces the fit table") {
    const fs::path dir = work_dir() / "roundtrip";
    const fs::path cfg = work_dir() / "small_rt.json";
    write_config(cfg, kSmallConfig);
    REQUIRE(run_cli("trotter-sweep --config " + cfg.string() + " --out " + dir.string())
                .exit_code == 0);

    const auto series = zeno::parse_series_csv(slurp(dir / "trotter_series.csv"));
    std::istringstream fits(slurp(dir / "trotter_fits.csv"));
    std::string line;
    std::getline(fits, line);  // header
    std::size_t idx = 0;
    while (std::getline(fits, line)) {
        REQUIRE(idx < series.size());
        std::istringstream row(line);
        std::string proto, alpha_s, seed_s, beta_s, intercept_s, rms_s, nmin_s, nmax_s;
        std::getline(row, proto, ',');
        std::getline(row, alpha_s, ',');
        std::getline(row, seed_s, ',');
        std::getline(row, beta_s, ',');
        std::getline(row, intercept_s, ',');
        std::getline(row, rms_s, ',');
        std::getline(row, nmin_s, ',');
        std::getline(row, nmax_s);

        const auto fit = zeno::loglog_fit(series[idx], std::stoull(nmin_s), std::stoull(nmax_s));
        CHECK(std::stod(beta_s) == fit.slope);
        CHECK(std::stod(intercept_s) == fit.intercept);
        CHECK(std::stod(rms_s) == fit.rms_residual);
        ++idx;
    }
    CHECK(idx == series.size());
}

TEST_CASE("re-running overwrites with byte-identical CSV output") {
    const fs::path dir = work_dir() / "idempotent";
    const fs::path cfg = work_dir() / "small_idem.json";
    write_config(cfg, kSmallConfig);

    REQUIRE(run_cli("zeno-sweep --config " + cfg.string() + " --out " + dir.string()).exit_code ==
            0);
    const std::string series_first = slurp(dir / "zeno_series.csv");
    const std::string fits_first = slurp(dir / "zeno_fits.csv");
    const std::string manifest_first = slurp(dir / "manifest.json");

    REQUIRE(run_cli("zeno-sweep --config " + cfg.string() + " --out " + dir.string()).exit_code ==
            0);
    CHECK(slurp(dir / "zeno_series.csv") == series_first);
    CHECK(slurp(dir / "zeno_fits.csv") == fits_first);

    // Manifests agree except for the timestamp field.
    const auto strip_timestamp = [](std::string text) {
        const auto pos = text.find("\"timestamp\"");
        if (pos != std::string::npos) {
            const auto end = text.find('\n', pos);
            text.erase(pos, end - pos);
        }
        return text;
    };
    CHECK(strip_timestamp(slurp(dir / "manifest.json")) == strip_timestamp(manifest_first));
}

TEST_CASE("alpha >= 1 exits 3 for the zeno protocol") {
    const fs::path cfg = work_dir() / "alpha15.json";
    write_config(cfg, R"({"alphas": [1.5]})");
    const RunResult r = run_cli("zeno-sweep --config " + cfg.string() + " --out " +
                                (work_dir() / "x1").string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("alpha 0.99 is accepted by the zeno protocol") {
    const fs::path cfg = work_dir() / "alpha099.json";
    write_config(cfg, R"({
      "alphas": [0.99],
      "n_grid": {"min": 100, "max": 1000, "points_per_decade": 6},
      "fit_window": [100, 1000],
      "seeds": [0]
    })");
    const RunResult r = run_cli("zeno-sweep --config " + cfg.string() + " --out " +
                                (work_dir() / "x2").string());
    CHECK(r.exit_code == 0);
}

TEST_CASE("malformed or unusable configs exit 2") {
    const fs::path bad = work_dir() / "bad.json";
    write_config(bad, "{ not json");
    CHECK(run_cli("zeno-sweep --config " + bad.string()).exit_code == 2);

    CHECK(run_cli("zeno-sweep --config " + (work_dir() / "missing.json").string()).exit_code == 2);

    const fs::path single = work_dir() / "single.json";
    write_config(single, R"({"n_grid": [1000], "fit_window": [1000, 1000]})");
    CHECK(run_cli("trotter-sweep --config " + single.string()).exit_code == 2);

    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("zero Hamiltonian produces degenerate fit markers") {
    const fs::path cfg = work_dir() / "zero.json";
    write_config(cfg, R"({
      "alphas": [0.5],
      "n_grid": {"min": 100, "max": 1000, "points_per_decade": 6},
      "fit_window": [100, 1000],
      "seeds": [0],
      "hamiltonian": "zero"
    })");
    const fs::path dir = work_dir() / "zero_out";
    REQUIRE(run_cli("trotter-sweep --config " + cfg.string() + " --out " + dir.string())
                .exit_code == 0);
    CHECK(slurp(dir / "trotter_fits.csv").find("degenerate") != std::string::npos);
}

TEST_CASE("beta-curve emits one sorted row per (alpha, seed)") {
    const fs::path cfg = work_dir() / "beta.json";
    write_config(cfg, R"({
      "alphas": [0.8, 0.2, 0.5],
      "n_grid": {"min": 100, "max": 10000, "points_per_decade": 6},
      "fit_window": [1000, 10000],
      "seeds": [0]
    })");
    const fs::path dir = work_dir() / "beta_out";
    REQUIRE(run_cli("beta-curve --config " + cfg.string() + " --out " + dir.string()).exit_code ==
            0);
    std::istringstream table(slurp(dir / "beta_curve.csv"));
    std::string line;
    std::getline(table, line);
    std::vector<double> alphas;
    while (std::getline(table, line)) {
        std::istringstream row(line);
        std::string proto, alpha_s;
        std::getline(row, proto, ',');
        std::getline(row, alpha_s, ',');
        CHECK(proto == "trotter");
        alphas.push_back(std::stod(alpha_s));
    }
    REQUIRE(alphas.size() == 3);
    CHECK(alphas[0] == 0.2);
    CHECK(alphas[1] == 0.5);
    CHECK(alphas[2] == 0.8);
}

TEST_CASE("--seeds flag replaces the seed list") {
    const fs::path cfg = work_dir() / "seeds.json";
    write_config(cfg, R"({
      "alphas": [0.5],
      "n_grid": {"min": 100, "max": 1000, "points_per_decade": 6},
      "fit_window": [100, 1000],
      "seeds": [17]
    })");
    const fs::path dir = work_dir() / "seeds_out";
    REQUIRE(run_cli("trotter-sweep --config " + cfg.string() + " --seeds 3 --threads 2 --out " +
                    dir.string())
                .exit_code == 0);
    const auto series = zeno::parse_series_csv(slurp(dir / "trotter_series.csv"));
    REQUIRE(series.size() == 3);
    CHECK(series[0].seed == 0);
    CHECK(series[2].seed == 2);
}

TEST_CASE("paper presets are wired through") {
    const fs::path dir = work_dir() / "preset_out";
    const RunResult r =
        run_cli("zeno-sweep --preset paper-fig4 --seeds 1 --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    const auto series = zeno::parse_series_csv(slurp(dir / "zeno_series.csv"));
    REQUIRE(series.size() == 3);  // alphas 0.3, 0.5, 0.8 with the single seed 0
    CHECK(series[0].alpha == 0.3);
    CHECK(series[2].alpha == 0.8);
    CHECK(series[0].points.front().n == 10);
    CHECK(series[0].points.back().n == 1000000);

    CHECK(run_cli("zeno-sweep --preset no-such-preset").exit_code == 2);
}

TEST_CASE("unwritable output directory exits 4") {
    const fs::path cfg = work_dir() / "small_io.json";
    write_config(cfg, kSmallConfig);
    const RunResult r =
        run_cli("zeno-sweep --config " + cfg.string() + " --out /dev/null/nope");
    CHECK(r.exit_code == 4);
}

TEST_CASE("qubit-check validates alpha and reports passing asymptotics") {
    CHECK(run_cli("qubit-check --alpha 1.2 --n-max 1000000").exit_code == 2);

    const RunResult half = run_cli("qubit-check --alpha 0.5 --n-max 1000000");
    CHECK(half.exit_code == 0);
    CHECK(half.stdout_text.find("FAIL") == std::string::npos);

    const RunResult zero = run_cli("qubit-check --alpha 0 --n-max 1000000");
    CHECK(zero.exit_code == 0);
    CHECK(zero.stdout_text.find("FAIL") == std::string::npos);
}

TEST_CASE("resonance-demo splits parities and honors n-max") {
    const RunResult tiny = run_cli("resonance-demo --seed 1 --n-max 2");
    CHECK(tiny.exit_code == 0);
    CHECK(count_lines(tiny.stdout_text) == 3);  // header + n=1 + n=2

    const RunResult generic = run_cli("resonance-demo --seed 1 --n-max 40");
    CHECK(generic.exit_code == 0);
    std::istringstream rows(generic.stdout_text);
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
        std::istringstream row(line);
        std::uint64_t n;
        std::string parity;
        double deviation;
        row >> n >> parity >> deviation;
        if (parity == "even")
            CHECK(deviation <= 1e-10);
        else
            CHECK(deviation >= 0.05);
    }

    CHECK(run_cli("resonance-demo --n-max 1").exit_code == 2);
}
