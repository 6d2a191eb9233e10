#ifndef ZENO_COMPLEX_MATRIX_HPP
#define ZENO_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zeno {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. The design point is small
// dimensions (<= ~64), so everything is plain loops and value semantics.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> entries);
    static ComplexMatrix diagonal(std::span<const cplx> entries);
    // Row-major literal, e.g. {{1,0},{0,-1}}. Rows must be square.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    std::size_t dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    std::span<const cplx> data() const { return a_; }
    std::span<cplx> data() { return a_; }

    ComplexMatrix adjoint() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scale);

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& a);
ComplexMatrix operator*(double scale, const ComplexMatrix& a);

// Hilbert-Schmidt (Frobenius) norm sqrt(tr(A'A)).
double hs_norm(const ComplexMatrix& a);
// ||a - b|| without materializing the difference.
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// ||A - A'||, the Hermiticity defect.
double hermiticity_defect(const ComplexMatrix& a);
// ||U'U - I||, the unitarity defect.
double unitarity_defect(const ComplexMatrix& u);

constexpr double kHermitianRelTol = 1e-10;
constexpr double kUnitaryTol = 1e-8;

bool is_hermitian(const ComplexMatrix& a, double rel_tol = kHermitianRelTol);

// Throws DimensionMismatch unless both matrices share `dim`.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);

}  // namespace zeno

#endif
