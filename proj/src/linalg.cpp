#include "qsl2q/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsl2q {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kPsdClampTol = 1e-9;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// One cyclic Jacobi pass over all off-diagonal pairs of the Hermitian
// matrix a. Each rotation J has J_pp = J_qq = c, J_pq = s e^{i phi},
// J_qp = -s e^{-i phi} with phi = arg a_pq; applying a <- J^dag a J zeroes
// a_pq exactly. v (if nonnull) accumulates v <- v J.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
  const int n = a.dim();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq_abs = std::abs(a(p, q));
      if (apq_abs == 0.0) continue;
      const cdouble phase = a(p, q) / apq_abs;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double tau = (aqq - app) / (2.0 * apq_abs);
      // t = tan(theta), smaller root for stability
      double t;
      if (std::isfinite(tau)) {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      } else {
        t = 0.0;
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const cdouble sp = s * phase;          // J_pq
      const cdouble spc = std::conj(sp);     // -J_qp

      for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cdouble akp = a(k, p);
        const cdouble akq = a(k, q);
        a(k, p) = c * akp - spc * akq;
        a(k, q) = sp * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
      }
      a(p, p) = app - t * apq_abs;
      a(q, q) = aqq + t * apq_abs;
      a(p, q) = 0.0;
      a(q, p) = 0.0;

      if (v != nullptr) {
        for (int k = 0; k < n; ++k) {
          const cdouble vkp = (*v)(k, p);
          const cdouble vkq = (*v)(k, q);
          (*v)(k, p) = c * vkp - spc * vkq;
          (*v)(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }
}

void check_input(const ComplexMatrix& m) {
  if (!is_finite(m)) throw NonFiniteError("hermitian_eig: NaN or Inf in input");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol)
    throw NonHermitianError("hermitian_eig: hermiticity defect " + std::to_string(defect));
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  ComplexMatrix a(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return a;
}

void run_jacobi(ComplexMatrix& a, ComplexMatrix* v) {
  const double threshold = 1e-14 * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) < threshold) break;
    jacobi_sweep(a, v);
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  check_input(m);
  ComplexMatrix a = symmetrized(m);
  ComplexMatrix v = ComplexMatrix::identity(m.dim());
  run_jacobi(a, &v);

  const int n = m.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::array<double, ComplexMatrix::kMaxDim> hermitian_eigenvalues(const ComplexMatrix& m) {
  check_input(m);
  ComplexMatrix a = symmetrized(m);
  run_jacobi(a, nullptr);

  std::array<double, ComplexMatrix::kMaxDim> vals{};
  for (int i = 0; i < m.dim(); ++i) vals[i] = a(i, i).real();
  std::sort(vals.begin(), vals.begin() + m.dim());
  return vals;
}

std::array<double, ComplexMatrix::kMaxDim> singular_values(const ComplexMatrix& m) {
  if (!is_finite(m)) throw NonFiniteError("singular_values: NaN or Inf in input");
  const int n = m.dim();
  ComplexMatrix a = m;

  // One-sided Jacobi: rotate column pairs until mutually orthogonal; the
  // singular values are then the column norms.
  std::array<double, ComplexMatrix::kMaxDim> col_norm2{};
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(a(i, j));
    col_norm2[j] = s;
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cdouble gpq = 0.0;
        for (int i = 0; i < n; ++i) gpq += std::conj(a(i, p)) * a(i, q);
        const double gpq2 = std::norm(gpq);
        if (gpq2 <= 1e-30 * col_norm2[p] * col_norm2[q] || gpq2 == 0.0) continue;
        rotated = true;

        const double gpq_abs = std::sqrt(gpq2);
        const cdouble phase = gpq / gpq_abs;
        const double tau = (col_norm2[q] - col_norm2[p]) / (2.0 * gpq_abs);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cdouble sp = s * phase;
        const cdouble spc = std::conj(sp);
        for (int i = 0; i < n; ++i) {
          const cdouble aip = a(i, p);
          const cdouble aiq = a(i, q);
          a(i, p) = c * aip - spc * aiq;
          a(i, q) = sp * aip + c * aiq;
        }
        col_norm2[p] -= t * gpq_abs;
        col_norm2[q] += t * gpq_abs;
      }
    }
    if (!rotated) break;
  }

  std::array<double, ComplexMatrix::kMaxDim> sigma{};
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(a(i, j));
    sigma[j] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.begin() + n, std::greater<>());
  return sigma;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  EigenDecomposition eig = hermitian_eig(m);
  const int n = m.dim();
  for (double& lambda : eig.eigenvalues) {
    if (lambda < -kPsdClampTol)
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " below -1e-9");
    if (lambda < 0.0) lambda = 0.0;
  }
  // R = V sqrt(D) V^dag
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cdouble sum = 0.0;
      for (int k = 0; k < n; ++k)
        sum += eig.eigenvectors(i, k) * std::sqrt(eig.eigenvalues[k]) *
               std::conj(eig.eigenvectors(j, k));
      r(i, j) = sum;
    }
  }
  return r;
}

}  // namespace qsl2q
