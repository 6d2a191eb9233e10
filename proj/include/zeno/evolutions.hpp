#ifndef ZENO_EVOLUTIONS_HPP
#define ZENO_EVOLUTIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "zeno/complex_matrix.hpp"
#include "zeno/spectral.hpp"

namespace zeno {

constexpr double kPhaseClusterTol = 1e-8;

// Wrap to the principal branch (-pi, pi].
double wrap_phase(double phi);

// A unitary kick together with its spectral data: matrix = sum_u e^{-i phi_u} P_u
// with pairwise distinct phases modulo 2*pi.
struct KickOperator {
    ComplexMatrix matrix;
    std::vector<double> phases;  // principal branch
    std::vector<ComplexMatrix> projectors;

    std::size_t dim() const { return matrix.dim(); }
    std::size_t sectors() const { return phases.size(); }

    // e^{-i angle V} expressed through V's eigenprojections; phases that
    // collide on the unit circle merge their sectors.
    static KickOperator from_potential(const SpectralDecomposition& dec, double angle,
                                       double circle_tol = kPhaseClusterTol);
    // Spectral decomposition of an arbitrary unitary, via the commuting
    // Hermitian pair (U+U')/2 and (U-U')/(2i).
    static KickOperator from_unitary(const ComplexMatrix& u, double circle_tol = kPhaseClusterTol);

    // Max violation of the reconstruction and phase-distinctness invariants.
    double defect() const;
};

// The map n -> K_n along which the double limit is taken.
class ScalingSchedule {
  public:
    enum class Kind { power, linear, table };

    static ScalingSchedule power(double alpha);               // K_n = n^alpha
    static ScalingSchedule linear();                          // K_n = n
    static ScalingSchedule table(std::vector<std::pair<std::uint64_t, double>> entries);

    double operator()(std::uint64_t n) const;
    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    // K_n/n decreasing across the sampled grid (the checkable form of K_n = o(n)).
    bool sublinear_on(std::span<const std::uint64_t> grid) const;

  private:
    ScalingSchedule(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
    Kind kind_;
    double alpha_ = 0.0;
    std::vector<std::pair<std::uint64_t, double>> table_;
};

// Inputs of the explicit kicked-limit error bound.
struct BoundConstants {
    double resonance = 1.0;   // C, from the kick phases
    std::size_t sectors = 1;  // m
    double h_norm = 0.0;      // ||H||
    double t = 1.0;

    static BoundConstants for_kick(const KickOperator& kick, const ComplexMatrix& h, double t);
};

// C = max_{u != v} 1/|sin((phi_u - phi_v)/2)|. Throws ResonantPhases when a
// pair coincides modulo 2*pi within tol.
double resonance_constant(std::span<const double> phases, double tol = kPhaseClusterTol);

// True iff t*(lambda_u - lambda_v) stays away from 2*pi*Z for all pairs, so
// e^{-i t V} keeps V's eigenprojections.
bool nonresonance_check(double t, std::span<const double> eigenvalues, double tol = kPhaseClusterTol);

// H_Z = sum_u P_u H P_u.
ComplexMatrix zeno_hamiltonian(const ComplexMatrix& h, std::span<const ComplexMatrix> projectors);
ComplexMatrix zeno_hamiltonian(const ComplexMatrix& h, const SpectralDecomposition& dec);

// (U_k e^{-i (t/n) H})^n
ComplexMatrix kicked_evolution(const KickOperator& kick, const ComplexMatrix& h, double t,
                               std::uint64_t n);

// e^{-i t (H + K V)}
ComplexMatrix coupled_evolution(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                                double t);

// (e^{-i (t/n) K V} e^{-i (t/n) H})^n
ComplexMatrix trotter_step_power(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                                 double t, std::uint64_t n);

// || U_k'^n (U_k e^{-i(t/n)H})^n - e^{-i t H_Z} ||, H_Z from the kick's sectors.
double pulsed_error(const KickOperator& kick, const ComplexMatrix& h, double t, std::uint64_t n);

// || e^{i t K V} e^{-i t (H + K V)} - e^{-i t H_Z} ||, H_Z from V's sectors.
double strong_coupling_error(const ComplexMatrix& h, const ComplexMatrix& v, double coupling,
                             double t);

// eps^Z(n) = || (e^{-i(t/n)K_n V} e^{-i(t/n)H})^n - e^{-i t K_n V} e^{-i t H_Z} ||.
// Throws ScheduleViolation when K_n >= n (the sector identification between V
// and the step kick can break down).
double intermediate_zeno_error(const ComplexMatrix& h, const ComplexMatrix& v,
                               const ScalingSchedule& schedule, double t, std::uint64_t n);

// eps^T(n) = || (e^{-i(t/n)K_n V} e^{-i(t/n)H})^n - e^{-i t (K_n V + H)} ||.
double generalized_trotter_error(const ComplexMatrix& h, const ComplexMatrix& v,
                                 const ScalingSchedule& schedule, double t, std::uint64_t n);

// Explicit kicked-limit bound  C t m^2 ||H|| (1 + 2 e^{t m ||H||}) / n.
double pulsed_error_bound(const BoundConstants& bc, std::uint64_t n);

// Leading term K_n ||A|| ||B|| / n of the generalized Trotter bound. The
// remainder is o(K_n/n) and is not computed.
double trotter_leading_bound(double a_norm, double b_norm, double coupling, std::uint64_t n);

}  // namespace zeno

#endif
