#ifndef ZENO_MATFUN_HPP
#define ZENO_MATFUN_HPP

#include <cstdint>

#include "zeno/complex_matrix.hpp"
#include "zeno/hermitian_eig.hpp"

namespace zeno {

// Unitary group generated by a fixed Hermitian matrix: one eigendecomposition
// up front, then evolve(s) = e^{-i s H} costs two small multiplies. Reuse this
// when the same generator is exponentiated at many parameter values.
class HermitianPropagator {
  public:
    explicit HermitianPropagator(const ComplexMatrix& h, double rel_tol = kHermitianRelTol);

    std::size_t dim() const { return eig_.eigenvectors.dim(); }
    const HermitianEigen& eigen() const { return eig_; }

    // e^{-i s H}
    ComplexMatrix evolve(double s) const;

  private:
    HermitianEigen eig_;
};

// e^{-i s H} for Hermitian H. Unitary to ~1e-14 in HS norm by construction.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double s);

// U^n by binary exponentiation (O(log n) multiplies). Throws NotUnitary when
// ||U'U - I|| > tol.
ComplexMatrix unitary_power(const ComplexMatrix& u, std::uint64_t n, double tol = kUnitaryTol);

}  // namespace zeno

#endif
