// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs single-threaded; the full suite stays well under the
// ten-minute budget on one core.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zeno/complex_matrix.hpp"
#include "zeno/evolutions.hpp"
#include "zeno/experiments.hpp"
#include "zeno/matfun.hpp"
#include "zeno/qubit.hpp"
#include "zeno/rng.hpp"
#include "zeno/spectral.hpp"

using namespace zeno;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

const std::vector<std::uint64_t> kSlopeSeeds{1, 2, 4};
const std::vector<double> kAlphas{0.3, 0.5, 0.8};

ComplexMatrix paper_potential() { return diag_potential(std::vector<double>{1, 1, 0, 0, 0}); }

// Criteria 1 and 2: last-decade slopes of eps^Z (-alpha +- 0.15) and eps^T
// (-1 +- 0.15) for three seeds and three alphas at 25 points per decade.
void criterion_fig4_fig5() {
    const ComplexMatrix v = paper_potential();
    const auto grid = log_spaced_grid(100000, 1000000, 25);

    bool zeno_ok = true, trotter_ok = true;
    std::string zeno_detail, trotter_detail;
    for (std::uint64_t seed : kSlopeSeeds) {
        const ComplexMatrix h = random_hermitian(seed, 5);
        for (double alpha : kAlphas) {
            ConvergenceSeries sz{Protocol::zeno, alpha, seed, {}};
            ConvergenceSeries st{Protocol::trotter, alpha, seed, {}};
            const ScalingSchedule schedule = ScalingSchedule::power(alpha);
            for (std::uint64_t n : grid) {
                sz.points.push_back({n, intermediate_zeno_error(h, v, schedule, 1.0, n)});
                st.points.push_back({n, generalized_trotter_error(h, v, schedule, 1.0, n)});
            }
            const double bz = loglog_fit(sz, grid.front(), grid.back()).slope;
            const double bt = loglog_fit(st, grid.front(), grid.back()).slope;
            if (std::abs(bz + alpha) > 0.15) {
                zeno_ok = false;
                zeno_detail += " seed " + std::to_string(seed) + " alpha " +
                               std::to_string(alpha) + " slope " + std::to_string(bz) + ";";
            }
            if (std::abs(bt + 1.0) > 0.15) {
                trotter_ok = false;
                trotter_detail += " seed " + std::to_string(seed) + " alpha " +
                                  std::to_string(alpha) + " slope " + std::to_string(bt) + ";";
            }
        }
    }
    report(1, zeno_ok,
           "zeno slopes over [1e5,1e6] within -alpha +- 0.15 for 3 seeds x {0.3,0.5,0.8}" +
               zeno_detail);
    report(2, trotter_ok,
           "trotter slopes over [1e5,1e6] within -1 +- 0.15 for 3 seeds x {0.3,0.5,0.8}" +
               trotter_detail);
}

// Criterion 3: the 21-alpha beta table, 10 seeds, window [1e4,1e6]; per-alpha
// mean beta within [-1.1, -0.9] for every alpha >= 0.3.
void criterion_fig6() {
    ExperimentConfig cfg = ExperimentConfig::defaults();
    cfg.alphas.clear();
    for (int k = 0; k <= 20; ++k) cfg.alphas.push_back(0.05 * k);
    cfg.n_grid = log_spaced_grid(10000, 1000000, 25);
    cfg.fit_min = 10000;
    cfg.fit_max = 1000000;
    cfg.seeds.clear();
    for (std::uint64_t s = 0; s < 10; ++s) cfg.seeds.push_back(s);

    const std::vector<BetaPoint> rows = beta_curve(cfg, 1);
    bool ok = rows.size() == 210;
    std::string detail = "beta table has " + std::to_string(rows.size()) + " rows;";
    for (std::size_t a = 0; a < cfg.alphas.size(); ++a) {
        const double alpha = cfg.alphas[a];
        double mean = 0.0;
        int count = 0;
        for (const BetaPoint& row : rows)
            if (row.alpha == alpha && !row.degenerate) {
                mean += row.fit.slope;
                ++count;
            }
        mean /= count > 0 ? count : 1;
        if (alpha >= 0.3 - 1e-12) {
            const bool in_band = count == 10 && mean >= -1.1 && mean <= -0.9;
            if (!in_band) {
                ok = false;
                detail += " alpha " + std::to_string(alpha) + " mean " + std::to_string(mean) + ";";
            }
        }
    }
    report(3, ok, "per-alpha mean beta in [-1.1,-0.9] for alpha >= 0.3 (10 seeds); " + detail);
}

// Criterion 4: the explicit kicked-limit bound dominates the measured error,
// tolerance-free, for the kicked qubit and five random instances.
void criterion_bound() {
    bool ok = true;
    std::string detail;
    const std::vector<std::uint64_t> ns{10, 100, 1000, 10000, 100000, 1000000};

    {
        const ComplexMatrix x = qubit::pauli_x();
        const KickOperator kick = KickOperator::from_unitary(
            expm_hermitian(qubit::pauli_z(), std::numbers::pi / 2));
        const BoundConstants bc = BoundConstants::for_kick(kick, x, 1.0);
        for (std::uint64_t n : ns) {
            const double err = pulsed_error(kick, x, 1.0, n);
            if (err > pulsed_error_bound(bc, n)) {
                ok = false;
                detail += " qubit n " + std::to_string(n) + ";";
            }
        }
    }
    const KickOperator kick5 =
        KickOperator::from_potential(spectral_projectors(paper_potential()), 1.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ComplexMatrix h = random_hermitian(seed, 5);
        const BoundConstants bc = BoundConstants::for_kick(kick5, h, 1.0);
        for (std::uint64_t n : ns) {
            const double err = pulsed_error(kick5, h, 1.0, n);
            if (err > pulsed_error_bound(bc, n)) {
                ok = false;
                detail += " seed " + std::to_string(seed) + " n " + std::to_string(n) + ";";
            }
        }
    }
    report(4, ok, "pulsed_error <= C t m^2 |H| (1+2e^{t m |H|})/n at n = 10..1e6" + detail);
}

// Criterion 5: the strong-coupling error halves per coupling doubling in the
// geometric mean over K = 2^10..2^20.
void criterion_strong_coupling() {
    bool ok = true;
    std::string detail;
    const ComplexMatrix v = paper_potential();
    for (std::uint64_t seed : kSlopeSeeds) {
        const ComplexMatrix h = random_hermitian(seed, 5);
        const double first = strong_coupling_error(h, v, std::ldexp(1.0, 10), 1.0);
        const double last = strong_coupling_error(h, v, std::ldexp(1.0, 20), 1.0);
        const double ratio = std::pow(last / first, 0.1);
        if (!(ratio >= 0.4 && ratio <= 0.6)) {
            ok = false;
            detail += " seed " + std::to_string(seed) + " ratio " + std::to_string(ratio) + ";";
        }
    }
    report(5, ok, "doubling K halves the strong-coupling error (0.5 +- 0.1, K = 2^10..2^20)" +
                      detail);
}

// Criterion 6: closed-form qubit asymptotics at n = 1e6.
void criterion_qubit() {
    bool ok = true;
    std::string detail;
    const std::uint64_t n = 1000000;
    for (double alpha : kAlphas) {
        const qubit::QubitDiff diff = qubit::qubit_diff(n, alpha);
        const qubit::QubitTarget target = qubit::qubit_target(n, alpha);

        const double phase_ratio =
            diff.phase_gap * std::pow(static_cast<double>(n), 2.0 - alpha) * 6.0;
        const double axis_ratio = static_cast<double>(n) * diff.axis_gap[1];
        ComplexMatrix resid = static_cast<double>(n) * diff.difference;
        resid += cplx(0.0, std::sin(target.phi)) * qubit::pauli_y();

        if (std::abs(phase_ratio - 1.0) > 0.05) {
            ok = false;
            detail += " phase-gap alpha " + std::to_string(alpha) + ";";
        }
        if (std::abs(axis_ratio - 1.0) > 0.05) {
            ok = false;
            detail += " axis-gap alpha " + std::to_string(alpha) + ";";
        }
        if (hs_norm(resid) > 0.1) {
            ok = false;
            detail += " residual alpha " + std::to_string(alpha) + ";";
        }
    }
    report(6, ok,
           "qubit asymptotics at n=1e6: (phi-n theta)n^{2-a} -> 1/6, n(u-v)_y -> 1, "
           "|n(U-V)+i sin(phi)Y| <= 0.1" +
               detail);
}

// Criterion 7: even/odd split of the K_n = n^2 resonance counterexample.
void criterion_resonance() {
    const ComplexMatrix h = random_hermitian(7, 5);
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= 1000; ++n) ns.push_back(n);
    double even_max = 0.0, odd_min = 1e300;
    for (const ResonancePoint& pt : resonance_demo(h, ns)) {
        if (pt.even)
            even_max = std::max(even_max, pt.deviation);
        else
            odd_min = std::min(odd_min, pt.deviation);
    }
    const bool ok = even_max <= 1e-10 && odd_min >= 0.05;
    report(7, ok,
           "resonance counterexample: even max " + std::to_string(even_max) + " <= 1e-10, odd min " +
               std::to_string(odd_min) + " >= 0.05");
}

// Criterion 8: oracle equivalence for the matrix exponential and the unitary
// power.
void criterion_oracles() {
    bool ok = true;
    std::string detail;
    double worst_expm = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ComplexMatrix h = random_hermitian(seed, 5);
        worst_expm = std::max(worst_expm,
                              hs_distance(expm_hermitian(h, 1.0), oracle::expm_taylor(h, 1.0)));
    }
    if (worst_expm > 1e-12) {
        ok = false;
        detail += " expm worst " + std::to_string(worst_expm) + ";";
    }

    double worst_pow = 0.0;
    const ComplexMatrix u = expm_hermitian(random_hermitian(11, 5), 1.0);
    ComplexMatrix incremental = ComplexMatrix::identity(5);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        incremental = incremental * u;
        worst_pow = std::max(worst_pow, hs_distance(unitary_power(u, n), incremental));
    }
    if (worst_pow > 1e-12) {
        ok = false;
        detail += " power worst " + std::to_string(worst_pow) + ";";
    }
    report(8, ok,
           "expm within 1e-12 of the Taylor oracle (100 draws); powers within 1e-12 of the "
           "running product (n <= 1e3)" +
               detail);
}

// Criterion 9: structural property suite over 1000 randomized cases.
void criterion_structural() {
    bool ok = true;
    std::string detail;
    Xoshiro256 gen(20260810);
    int checked = 0;
    for (int c = 0; c < 1000; ++c) {
        const std::size_t dim = 2 + gen.next() % 5;
        const std::uint64_t hseed = gen.next();
        const std::uint64_t vseed = gen.next();
        const ComplexMatrix h = random_hermitian(hseed, dim);
        const ComplexMatrix v = random_hermitian(vseed, dim);

        if (hs_distance(h, random_hermitian(hseed, dim)) != 0.0) {
            ok = false;
            detail += " determinism case " + std::to_string(c) + ";";
        }

        const SpectralDecomposition dec = spectral_projectors(v);
        if (dec.axiom_defect() > 1e-10) {
            ok = false;
            detail += " projector axioms case " + std::to_string(c) + ";";
        }

        const ComplexMatrix hz = zeno_hamiltonian(h, dec);
        if (hs_distance(v * hz, hz * v) > 1e-10) {
            ok = false;
            detail += " [V,H_Z] case " + std::to_string(c) + ";";
        }

        const std::uint64_t n = 1 + gen.next() % 128;
        const double coupling = 100.0 * gen.uniform01();
        const double t = 2.0 * gen.uniform01();
        const KickOperator kick = KickOperator::from_potential(dec, 0.5 + gen.uniform01());
        const double defects[] = {
            unitarity_defect(kicked_evolution(kick, h, t, n)),
            unitarity_defect(coupled_evolution(h, v, coupling, t)),
            unitarity_defect(trotter_step_power(h, v, coupling, t, n)),
            unitarity_defect(expm_hermitian(h, t))};
        for (double d : defects)
            if (d > 1e-10) {
                ok = false;
                detail += " unitarity case " + std::to_string(c) + ";";
                break;
            }
        ++checked;
    }
    report(9, ok,
           "structural invariants over " + std::to_string(checked) + " randomized cases" + detail);
}

}  // namespace

int main() {
    criterion_fig4_fig5();
    criterion_fig6();
    criterion_bound();
    criterion_strong_coupling();
    criterion_qubit();
    criterion_resonance();
    criterion_oracles();
    criterion_structural();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
