#include "zeno/spectral.hpp"

#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/hermitian_eig.hpp"

namespace zeno {

double SpectralDecomposition::axiom_defect() const {
    const std::size_t m = projectors.size();
    double worst = 0.0;
    ComplexMatrix sum(dim);
    for (std::size_t u = 0; u < m; ++u) {
        worst = std::max(worst, hermiticity_defect(projectors[u]));
        sum += projectors[u];
        for (std::size_t v = 0; v < m; ++v) {
            const ComplexMatrix prod = projectors[u] * projectors[v];
            if (u == v)
                worst = std::max(worst, hs_distance(prod, projectors[u]));
            else
                worst = std::max(worst, hs_norm(prod));
        }
    }
    worst = std::max(worst, hs_distance(sum, ComplexMatrix::identity(dim)));
    return worst;
}

double default_cluster_tol(const ComplexMatrix& v) { return 1e-8 * std::max(1.0, hs_norm(v)); }

SpectralDecomposition spectral_projectors(const ComplexMatrix& v, double cluster_tol) {
    if (cluster_tol < 0.0) cluster_tol = default_cluster_tol(v);
    const HermitianEigen eig = eigh(v);  // throws NotHermitian
    const std::size_t n = v.dim();
    const ComplexMatrix& w = eig.eigenvectors;

    SpectralDecomposition dec;
    dec.dim = n;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && eig.eigenvalues[j + 1] - eig.eigenvalues[j] <= cluster_tol) ++j;

        double lambda = 0.0;
        for (std::size_t k = i; k <= j; ++k) lambda += eig.eigenvalues[k];
        lambda /= static_cast<double>(j - i + 1);

        ComplexMatrix p(n);
        for (std::size_t k = i; k <= j; ++k)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) p(r, c) += w(r, k) * std::conj(w(c, k));
        // Symmetrize away roundoff asymmetry.
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                const cplx avg = 0.5 * (p(r, c) + std::conj(p(c, r)));
                p(r, c) = avg;
                p(c, r) = std::conj(avg);
            }
            p(r, r) = cplx(p(r, r).real(), 0.0);
        }

        dec.eigenvalues.push_back(lambda);
        dec.projectors.push_back(std::move(p));
        i = j + 1;
    }
    return dec;
}

}  // namespace zeno
