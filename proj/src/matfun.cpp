#include "zeno/matfun.hpp"

#include <cmath>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

// One Newton-Schulz polar-factor step, B <- B (3I - B'B) / 2. Valid while
// ||B'B - I|| < 1; squares the unitarity defect.
void polar_step(ComplexMatrix& b) {
    const std::size_t n = b.dim();
    ComplexMatrix gram(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx g{};
            for (std::size_t k = 0; k < n; ++k) g += std::conj(b(k, i)) * b(k, j);
            gram(i, j) = -0.5 * g;
        }
    for (std::size_t i = 0; i < n; ++i) gram(i, i) += 1.5;
    b = b * gram;
}

}  // namespace

HermitianPropagator::HermitianPropagator(const ComplexMatrix& h, double rel_tol)
    : eig_(eigh(h, rel_tol)) {}

ComplexMatrix HermitianPropagator::evolve(double s) const {
    const std::size_t n = dim();
    const ComplexMatrix& w = eig_.eigenvectors;
    // W * diag(e^{-i s lambda}) * W'
    ComplexMatrix scaled(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = -s * eig_.eigenvalues[j];
        const cplx e(std::cos(phase), std::sin(phase));
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) = w(i, j) * e;
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx sik = scaled(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += sik * std::conj(w(j, k));
        }
    // The eigenvector basis carries a few ulps of non-unitarity into the
    // product; projecting onto the polar factor hands downstream powers a
    // machine-clean unitary.
    polar_step(out);
    return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double s) {
    return HermitianPropagator(h).evolve(s);
}

ComplexMatrix unitary_power(const ComplexMatrix& u, std::uint64_t n, double tol) {
    if (unitarity_defect(u) > tol)
        throw NotUnitary("unitary_power: ||U'U - I|| exceeds tolerance");
    if (n == 0) return ComplexMatrix::identity(u.dim());
    if (n == 1) return u;
    ComplexMatrix result = ComplexMatrix::identity(u.dim());
    ComplexMatrix base = u;
    while (true) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n == 0) break;
        base = base * base;
        // Each squaring doubles the radial defect inherited from roundoff;
        // refining the polar factor keeps intermediates unitary at machine
        // precision for n up to 10^7 and beyond.
        polar_step(base);
    }
    polar_step(result);
    return result;
}

}  // namespace zeno
