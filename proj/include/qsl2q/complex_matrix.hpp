#ifndef QSL2Q_COMPLEX_MATRIX_HPP
#define QSL2Q_COMPLEX_MATRIX_HPP

#include <array>
#include <complex>
#include <span>

#include "qsl2q/errors.hpp"

namespace qsl2q {

using cdouble = std::complex<double>;

/// Dense complex square matrix of dimension 1..8, stored row-major in a
/// fixed inline buffer. Value type: cheap to copy, never allocates, which
/// keeps the Monte Carlo inner loops allocation-free.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 8;

  ComplexMatrix() : dim_(1) {}
  explicit ComplexMatrix(int dim) : dim_(checked_dim(dim)) {}

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  int dim() const { return dim_; }

  cdouble& operator()(int i, int j) { return e_[i * dim_ + j]; }
  const cdouble& operator()(int i, int j) const { return e_[i * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cdouble scalar);

 private:
  static int checked_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) throw DimensionMismatch("matrix dimension must be in [1, 8]");
    return dim;
  }

  int dim_;
  std::array<cdouble, kMaxDim * kMaxDim> e_{};
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cdouble scalar, ComplexMatrix m);

/// Matrix product; throws DimensionMismatch on nonconformable inputs.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Entrywise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& m);

cdouble trace(const ComplexMatrix& m);

bool is_finite(const ComplexMatrix& m);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);

}  // namespace qsl2q

#endif  // QSL2Q_COMPLEX_MATRIX_HPP
