#ifndef ZENO_QUBIT_HPP
#define ZENO_QUBIT_HPP

#include <array>
#include <cstdint>

#include "zeno/complex_matrix.hpp"

namespace zeno::qubit {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// e^{-i angle (axis . sigma)} for a unit axis.
ComplexMatrix axis_rotation(double angle, const std::array<double, 3>& axis);

// One step e^{-i (n^a/n) Z} e^{-i (1/n) X} written as a single rotation
// e^{-i theta u.sigma}. theta comes from atan2 on the quaternion components;
// arccos of a near-1 cosine would lose half the significant digits that the
// phase-gap asymptotics need.
struct QubitStep {
    std::uint64_t n;
    double alpha;
    double theta;                 // step rotation angle
    std::array<double, 3> axis;   // unit rotation axis u_n
};

// The coupled target e^{-i (n^a Z + X)} as a rotation e^{-i phi v.sigma} with
// phi = sqrt(n^{2a} + 1) and v = (1, 0, n^a)/phi.
struct QubitTarget {
    std::uint64_t n;
    double alpha;
    double phi;
    std::array<double, 3> axis;
};

// U_n - V_n for the two rotations above, with the diagnostics that control it.
struct QubitDiff {
    ComplexMatrix difference;       // U_n - V_n
    double hs_error;                // ||U_n - V_n||
    double phase_gap;               // phi_n - n*theta_n
    std::array<double, 3> axis_gap; // u_n - v_n
};

// Throws DegenerateAngle when the step rotation underflows (astronomical n),
// std::invalid_argument outside n >= 1, 0 <= alpha < 1.
QubitStep qubit_step(std::uint64_t n, double alpha);
QubitTarget qubit_target(std::uint64_t n, double alpha);
QubitDiff qubit_diff(std::uint64_t n, double alpha);

}  // namespace zeno::qubit

#endif
