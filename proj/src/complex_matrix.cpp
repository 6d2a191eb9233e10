#include "zeno/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    ComplexMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw std::invalid_argument("from_rows: ragged or non-square initializer");
        std::size_t j = 0;
        for (cplx v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (cplx& v : a_) v *= scale;
    return *this;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r += b;
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r -= b;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= scale;
    return r;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& a) { return cplx(scale, 0.0) * a; }

double hs_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "hs_distance");
    double s = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k) s += std::norm(da[k] - db[k]);
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

double unitarity_defect(const ComplexMatrix& u) {
    const std::size_t n = u.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx g{};
            for (std::size_t k = 0; k < n; ++k) g += std::conj(u(k, i)) * u(k, j);
            if (i == j) g -= 1.0;
            s += std::norm(g);
        }
    }
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    return hermiticity_defect(a) <= rel_tol * std::max(1.0, hs_norm(a));
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(where) + ": dimension mismatch " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace zeno
