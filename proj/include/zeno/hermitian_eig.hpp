#ifndef ZENO_HERMITIAN_EIG_HPP
#define ZENO_HERMITIAN_EIG_HPP

#include <vector>

#include "zeno/complex_matrix.hpp"

namespace zeno {

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // unitary, k-th column matches eigenvalues[k]
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws NotHermitian when ||H - H'|| > rel_tol * max(1, ||H||).
HermitianEigen eigh(const ComplexMatrix& h, double rel_tol = kHermitianRelTol);

}  // namespace zeno

#endif
