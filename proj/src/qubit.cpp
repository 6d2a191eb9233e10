#include "zeno/qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno::qubit {

namespace {

void check_args(std::uint64_t n, double alpha) {
    if (n == 0) throw std::invalid_argument("qubit: n must be positive");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("qubit: alpha must lie in [0, 1)");
}

}  // namespace

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }

ComplexMatrix pauli_y() { return ComplexMatrix::from_rows({{0, cplx(0, -1)}, {cplx(0, 1), 0}}); }

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

ComplexMatrix axis_rotation(double angle, const std::array<double, 3>& axis) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // c I - i s (ax X + ay Y + az Z)
    return ComplexMatrix::from_rows(
        {{cplx(c, -s * axis[2]), cplx(-s * axis[1], -s * axis[0])},
         {cplx(s * axis[1], -s * axis[0]), cplx(c, s * axis[2])}});
}

QubitStep qubit_step(std::uint64_t n, double alpha) {
    check_args(n, alpha);
    const double x = std::pow(static_cast<double>(n), alpha);
    const double a = x / static_cast<double>(n);  // Z angle per step
    const double b = 1.0 / static_cast<double>(n);  // X angle per step
    const double ca = std::cos(a), sa = std::sin(a);
    const double cb = std::cos(b), sb = std::sin(b);

    const std::array<double, 3> vec{ca * sb, sa * sb, sa * cb};
    const double r = std::sqrt(vec[0] * vec[0] + vec[1] * vec[1] + vec[2] * vec[2]);
    if (r < 1e-300) throw DegenerateAngle("qubit_step: rotation angle underflow");

    QubitStep step;
    step.n = n;
    step.alpha = alpha;
    step.theta = std::atan2(r, ca * cb);
    step.axis = {vec[0] / r, vec[1] / r, vec[2] / r};
    return step;
}

QubitTarget qubit_target(std::uint64_t n, double alpha) {
    check_args(n, alpha);
    const double x = std::pow(static_cast<double>(n), alpha);
    QubitTarget target;
    target.n = n;
    target.alpha = alpha;
    target.phi = std::hypot(x, 1.0);  // sqrt(n^{2a} + 1)
    target.axis = {1.0 / target.phi, 0.0, x / target.phi};
    return target;
}

QubitDiff qubit_diff(std::uint64_t n, double alpha) {
    const QubitStep step = qubit_step(n, alpha);
    const QubitTarget target = qubit_target(n, alpha);

    const ComplexMatrix un = axis_rotation(static_cast<double>(n) * step.theta, step.axis);
    const ComplexMatrix vn = axis_rotation(target.phi, target.axis);

    QubitDiff diff;
    diff.difference = un - vn;
    diff.hs_error = hs_norm(diff.difference);
    diff.phase_gap = target.phi - static_cast<double>(n) * step.theta;
    diff.axis_gap = {step.axis[0] - target.axis[0], step.axis[1] - target.axis[1],
                     step.axis[2] - target.axis[2]};
    return diff;
}

}  // namespace zeno::qubit
