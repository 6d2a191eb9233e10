#include "zeno/evolutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "zeno/errors.hpp"
#include "zeno/hermitian_eig.hpp"
#include "zeno/matfun.hpp"

namespace zeno {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PhaseSector {
    double phase;
    ComplexMatrix projector;
    int count = 1;  // merged members, for the representative phase
};

// Merge sectors whose phases collide on the unit circle (arc distance <= tol),
// including across the branch cut. Output phases are principal-branch and
// strictly separated by more than tol.
std::vector<PhaseSector> cluster_on_circle(std::vector<PhaseSector> in, double tol) {
    if (in.empty()) return in;
    std::sort(in.begin(), in.end(),
              [](const PhaseSector& a, const PhaseSector& b) { return a.phase < b.phase; });

    std::vector<PhaseSector> out;
    for (auto& s : in) {
        if (!out.empty() && s.phase - (out.back().phase / out.back().count) <= tol) {
            out.back().projector += s.projector;
            out.back().phase += s.phase;  // accumulate, divide at the end
            out.back().count += s.count;
        } else {
            out.push_back(std::move(s));
        }
    }
    for (auto& s : out) s.phase /= s.count;

    // Wrap-around: the lowest and highest sector may meet across -pi/+pi.
    if (out.size() > 1 && (out.front().phase + kTwoPi) - out.back().phase <= tol) {
        out.front().projector += out.back().projector;
        out.front().phase =
            (out.front().phase * out.front().count +
             (out.back().phase - kTwoPi) * out.back().count) /
            (out.front().count + out.back().count);
        out.front().count += out.back().count;
        out.front().phase = wrap_phase(out.front().phase);
        out.pop_back();
    }
    return out;
}

ComplexMatrix phase_sum(std::span<const double> phases,
                        std::span<const ComplexMatrix> projectors, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t u = 0; u < phases.size(); ++u) {
        const cplx e(std::cos(phases[u]), -std::sin(phases[u]));
        const auto p = projectors[u].data();
        auto d = m.data();
        for (std::size_t k = 0; k < d.size(); ++k) d[k] += e * p[k];
    }
    return m;
}

// Compressed Hermitian block W_c' B W_c for columns [lo, hi) of w.
ComplexMatrix compress(const ComplexMatrix& b, const ComplexMatrix& w, std::size_t lo,
                       std::size_t hi) {
    const std::size_t n = b.dim();
    const std::size_t k = hi - lo;
    ComplexMatrix bw(n);  // only the first k columns are used
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
            cplx acc{};
            for (std::size_t j = 0; j < n; ++j) acc += b(i, j) * w(j, lo + c);
            bw(i, c) = acc;
        }
    ComplexMatrix out(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            cplx acc{};
            for (std::size_t i = 0; i < n; ++i) acc += std::conj(w(i, lo + r)) * bw(i, c);
            out(r, c) = acc;
        }
    return out;
}

void symmetrize(ComplexMatrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
        a(r, r) = cplx(a(r, r).real(), 0.0);
    }
}

}  // namespace

double wrap_phase(double phi) {
    double r = std::remainder(phi, kTwoPi);  // [-pi, pi]
    if (r <= -std::numbers::pi) r = std::numbers::pi;
    return r;
}

KickOperator KickOperator::from_potential(const SpectralDecomposition& dec, double angle,
                                          double circle_tol) {
    std::vector<PhaseSector> sectors;
    sectors.reserve(dec.sectors());
    for (std::size_t u = 0; u < dec.sectors(); ++u)
        sectors.push_back({wrap_phase(angle * dec.eigenvalues[u]), dec.projectors[u], 1});
    sectors = cluster_on_circle(std::move(sectors), circle_tol);

    KickOperator kick;
    for (auto& s : sectors) {
        kick.phases.push_back(s.phase);
        kick.projectors.push_back(std::move(s.projector));
    }
    kick.matrix = phase_sum(kick.phases, kick.projectors, dec.dim);
    return kick;
}

KickOperator KickOperator::from_unitary(const ComplexMatrix& u, double circle_tol) {
    if (unitarity_defect(u) > kUnitaryTol)
        throw NotUnitary("KickOperator::from_unitary: input is not unitary");
    const std::size_t n = u.dim();

    // U = A + iB with commuting Hermitian A, B; eigenpairs (a, b) give the
    // unit-circle eigenvalue a + ib = e^{-i phi}.
    ComplexMatrix a(n), b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx uij = u(i, j);
            const cplx uji_c = std::conj(u(j, i));
            a(i, j) = 0.5 * (uij + uji_c);
            b(i, j) = cplx(0.0, -0.5) * (uij - uji_c);
        }

    const HermitianEigen ea = eigh(a);
    std::vector<PhaseSector> sectors;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && ea.eigenvalues[hi] - ea.eigenvalues[hi - 1] <= circle_tol) ++hi;

        const ComplexMatrix bc = compress(b, ea.eigenvectors, lo, hi);
        const HermitianEigen eb = eigh(bc);
        const std::size_t k = hi - lo;

        std::size_t slo = 0;
        while (slo < k) {
            std::size_t shi = slo + 1;
            while (shi < k && eb.eigenvalues[shi] - eb.eigenvalues[shi - 1] <= circle_tol) ++shi;

            double am = 0.0, bm = 0.0;
            for (std::size_t q = slo; q < shi; ++q) bm += eb.eigenvalues[q];
            bm /= static_cast<double>(shi - slo);
            for (std::size_t q = lo; q < hi; ++q) am += ea.eigenvalues[q];
            am /= static_cast<double>(hi - lo);

            // Lift the compressed eigenvectors, then form the projector.
            ComplexMatrix p(n);
            for (std::size_t q = slo; q < shi; ++q) {
                std::vector<cplx> vec(n);
                for (std::size_t i = 0; i < n; ++i) {
                    cplx acc{};
                    for (std::size_t c = 0; c < k; ++c)
                        acc += ea.eigenvectors(i, lo + c) * eb.eigenvectors(c, q);
                    vec[i] = acc;
                }
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) p(r, c) += vec[r] * std::conj(vec[c]);
            }
            symmetrize(p);

            sectors.push_back({std::atan2(-bm, am), std::move(p), 1});
            slo = shi;
        }
        lo = hi;
    }

    sectors = cluster_on_circle(std::move(sectors), circle_tol);
    KickOperator kick;
    for (auto& s : sectors) {
        kick.phases.push_back(s.phase);
        kick.projectors.push_back(std::move(s.projector));
    }
    kick.matrix = u;
    return kick;
}

double KickOperator::defect() const {
    return hs_distance(matrix, phase_sum(phases, projectors, matrix.dim()));
}

ScalingSchedule ScalingSchedule::power(double alpha) { return {Kind::power, alpha}; }

ScalingSchedule ScalingSchedule::linear() { return {Kind::linear, 1.0}; }

ScalingSchedule ScalingSchedule::table(std::vector<std::pair<std::uint64_t, double>> entries) {
    ScalingSchedule s(Kind::table, 0.0);
    std::sort(entries.begin(), entries.end());
    s.table_ = std::move(entries);
    return s;
}

double ScalingSchedule::operator()(std::uint64_t n) const {
    switch (kind_) {
        case Kind::power:
            return std::pow(static_cast<double>(n), alpha_);
        case Kind::linear:
            return static_cast<double>(n);
        case Kind::table: {
            const auto it = std::lower_bound(
                table_.begin(), table_.end(), n,
                [](const std::pair<std::uint64_t, double>& e, std::uint64_t key) {
                    return e.first < key;
                });
            if (it == table_.end() || it->first != n)
                throw std::invalid_argument("ScalingSchedule: n not in table");
            return it->second;
        }
    }
    throw std::logic_error("ScalingSchedule: bad kind");
}

bool ScalingSchedule::sublinear_on(std::span<const std::uint64_t> grid) const {
    double prev = std::numeric_limits<double>::infinity();
    for (std::uint64_t n : grid) {
        if (n == 0) return false;
        const double ratio = (*this)(n) / static_cast<double>(n);
        if (ratio > prev * (1.0 + 1e-12)) return false;
        prev = ratio;
    }
    return true;
}

BoundConstants BoundConstants::for_kick(const KickOperator& kick, const ComplexMatrix& h,
                                        double t) {
    BoundConstants bc;
    bc.sectors = kick.sectors();
    bc.resonance = kick.sectors() >= 2 ? resonance_constant(kick.phases) : 1.0;
    bc.h_norm = hs_norm(h);
    bc.t = t;
    return bc;
}

double resonance_constant(std::span<const double> phases, double tol) {
    if (phases.size() < 2)
        throw std::invalid_argument("resonance_constant: need at least two phases");
    double worst = 0.0;
    for (std::size_t i = 0; i < phases.size(); ++i)
        for (std::size_t j = i + 1; j < phases.size(); ++j) {
            const double gap = wrap_phase(phases[i] - phases[j]);
            if (std::abs(gap) <= tol)
                throw ResonantPhases("resonance_constant: phases coincide modulo 2*pi");
            worst = std::max(worst, 1.0 / std::abs(std::sin(0.5 * gap)));
        }
    return worst;
}

bool nonresonance_check(double t, std::span<const double> eigenvalues, double tol) {
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
            const double gap = std::remainder(t * (eigenvalues[i] - eigenvalues[j]), kTwoPi);
            if (std::abs(gap) <= tol) return false;
        }
    return true;
}

ComplexMatrix zeno_hamiltonian(const ComplexMatrix& h, std::span<const ComplexMatrix> projectors) {
    ComplexMatrix hz(h.dim());
    for (const ComplexMatrix& p : projectors) {
        require_same_dim(h, p, "zeno_hamiltonian");
        hz += p * h * p;
    }
    symmetrize(hz);
    return hz;
}

ComplexMatrix zeno_hamiltonian(const ComplexMatrix& h, const SpectralDecomposition& dec) {
    if (h.dim() != dec.dim) throw DimensionMismatch("zeno_hamiltonian: dimension mismatch");
    return zeno_hamiltonian(h, dec.projectors);
}

ComplexMatrix kicked_evolution(const KickOperator& kick, const ComplexMatrix& h, double t,
                               std::uint64_t n) {
    require_same_dim(kick.matrix, h, "kicked_evolution");
    if (n == 0) throw std::invalid_argument("kicked_evolution: n must be positive");
    const ComplexMatrix step = kick.matrix * expm_hermitian(h, t / static_cast<double>(n));
    return unitary_power(step, n);
}

ComplexMatrix coupled_evolution(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                                double t) {
    require_same_dim(h, v, "coupled_evolution");
    return expm_hermitian(h + coupling * v, t);
}

ComplexMatrix trotter_step_power(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                                 double t, std::uint64_t n) {
    require_same_dim(h, v, "trotter_step_power");
    if (n == 0) throw std::invalid_argument("trotter_step_power: n must be positive");
    const double dt = t / static_cast<double>(n);
    const ComplexMatrix step = expm_hermitian(v, dt * coupling) * expm_hermitian(h, dt);
    return unitary_power(step, n);
}

double pulsed_error(const KickOperator& kick, const ComplexMatrix& h, double t, std::uint64_t n) {
    const ComplexMatrix hz = zeno_hamiltonian(h, kick.projectors);
    const ComplexMatrix forward = kicked_evolution(kick, h, t, n);
    const ComplexMatrix rewind = unitary_power(kick.matrix.adjoint(), n);
    return hs_distance(rewind * forward, expm_hermitian(hz, t));
}

double strong_coupling_error(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                             double t) {
    require_same_dim(h, v, "strong_coupling_error");
    const SpectralDecomposition dec = spectral_projectors(v);
    const ComplexMatrix hz = zeno_hamiltonian(h, dec);
    const HermitianPropagator vp(v);
    const ComplexMatrix lhs = vp.evolve(-t * coupling) * coupled_evolution(h, v, coupling, t);
    return hs_distance(lhs, expm_hermitian(hz, t));
}

double intermediate_zeno_error(const ComplexMatrix& h, const ComplexMatrix& v,
                               const ScalingSchedule& schedule, double t, std::uint64_t n) {
    require_same_dim(h, v, "intermediate_zeno_error");
    if (n == 0) throw std::invalid_argument("intermediate_zeno_error: n must be positive");
    const double coupling = schedule(n);
    if (coupling >= static_cast<double>(n))
        throw ScheduleViolation("intermediate_zeno_error: K_n >= n, the schedule must be o(n)");

    const SpectralDecomposition dec = spectral_projectors(v);
    const ComplexMatrix hz = zeno_hamiltonian(h, dec);
    const HermitianPropagator vp(v);
    const double dt = t / static_cast<double>(n);
    const ComplexMatrix step = vp.evolve(dt * coupling) * expm_hermitian(h, dt);
    const ComplexMatrix forward = unitary_power(step, n);
    const ComplexMatrix target = vp.evolve(t * coupling) * expm_hermitian(hz, t);
    return hs_distance(forward, target);
}

double generalized_trotter_error(const ComplexMatrix& h, const ComplexMatrix& v,
                                 const ScalingSchedule& schedule, double t, std::uint64_t n) {
    require_same_dim(h, v, "generalized_trotter_error");
    if (n == 0) throw std::invalid_argument("generalized_trotter_error: n must be positive");
    const double coupling = schedule(n);
    const HermitianPropagator vp(v);
    const double dt = t / static_cast<double>(n);
    const ComplexMatrix step = vp.evolve(dt * coupling) * expm_hermitian(h, dt);
    const ComplexMatrix forward = unitary_power(step, n);
    return hs_distance(forward, coupled_evolution(h, v, coupling, t));
}

double pulsed_error_bound(const BoundConstants& bc, std::uint64_t n) {
    const double m = static_cast<double>(bc.sectors);
    return bc.resonance * bc.t * m * m * bc.h_norm *
           (1.0 + 2.0 * std::exp(bc.t * m * bc.h_norm)) / static_cast<double>(n);
}

double trotter_leading_bound(double a_norm, double b_norm, double coupling, std::uint64_t n) {
    return coupling * a_norm * b_norm / static_cast<double>(n);
}

}  // namespace zeno
