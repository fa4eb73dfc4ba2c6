#include "qsl2q/complex_matrix.hpp"

#include <cmath>

namespace qsl2q {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix addition: dimensions differ");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] += rhs.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix subtraction: dimensions differ");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] -= rhs.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scalar) {
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cdouble scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix product: dimensions differ");
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(i, j));
  return r;
}

cdouble trace(const ComplexMatrix& m) {
  cdouble t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

bool is_finite(const ComplexMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimensions differ");
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double max_abs(const ComplexMatrix& m) {
  double d = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) d = std::max(d, std::abs(m(i, j)));
  return d;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double d = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace qsl2q
