#include "zeno/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One two-sided rotation zeroing a(p,q). Updates a in place and accumulates
// the rotation into v (v <- v * J).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx beta = a(p, q);
    const double babs = std::abs(beta);
    if (babs == 0.0) return;
    const cplx f = beta / babs;  // unit phase of the pivot

    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double tau = (alpha - gamma) / (2.0 * babs);
    double t;
    if (std::abs(tau) > 1e150) {
        t = 1.0 / (2.0 * tau);  // avoid overflow in tau*tau
    } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    const cplx sf = s * f;        // column q mixing coefficient
    const cplx scf = s * std::conj(f);

    // A <- J' A J with J = I except J(p,p)=J(q,q)=c, J(p,q)=-s*f, J(q,p)=s*conj(f)
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp + scf * akq;
        a(k, q) = c * akq - sf * akp;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk + sf * aqk;
        a(q, k) = c * aqk - scf * apk;
    }
    // Exact forms for the pivot block, immune to cancellation in the loops above.
    a(p, p) = alpha + t * babs;
    a(q, q) = gamma - t * babs;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp + scf * vkq;
        v(k, q) = c * vkq - sf * vkp;
    }
}

}  // namespace

HermitianEigen eigh(const ComplexMatrix& h, double rel_tol) {
    const std::size_t n = h.dim();
    if (n == 0) throw DimensionMismatch("eigh: empty matrix");
    if (!h.all_finite()) throw NotHermitian("eigh: non-finite entries");
    const double scale = std::max(1.0, hs_norm(h));
    if (hermiticity_defect(h) > rel_tol * scale)
        throw NotHermitian("eigh: matrix is not Hermitian within tolerance");

    // Symmetrize to kill representation roundoff, then iterate.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        a(i, i) = cplx(a(i, i).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = 1e-15 * scale;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace zeno
