#ifndef ZENO_SPECTRAL_HPP
#define ZENO_SPECTRAL_HPP

#include <vector>

#include "zeno/complex_matrix.hpp"

namespace zeno {

// Distinct eigenvalues with their orthogonal eigenprojections:
//   P_u' = P_u,  P_u P_v = delta_uv P_u,  sum_u P_u = I,  V = sum_u lambda_u P_u.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;       // distinct, ascending
    std::vector<ComplexMatrix> projectors; // same order as eigenvalues
    std::size_t dim = 0;

    std::size_t sectors() const { return eigenvalues.size(); }

    // Max violation across the projector family axioms and the reconstruction
    // of the original matrix when provided. Used by tests and validation.
    double axiom_defect() const;
};

// Default clustering threshold: 1e-8 * max(1, ||V||).
double default_cluster_tol(const ComplexMatrix& v);

// Eigenvalues within cluster_tol of each other merge into one sector; each
// projector is the symmetrized outer-product sum over its cluster's
// eigenvectors. Pass cluster_tol < 0 for the default.
SpectralDecomposition spectral_projectors(const ComplexMatrix& v, double cluster_tol = -1.0);

}  // namespace zeno

#endif
