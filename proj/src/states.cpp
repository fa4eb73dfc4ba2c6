#include "qsl2q/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsl2q/linalg.hpp"

namespace qsl2q {

namespace {
constexpr double kNormTol = 1e-10;
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigTol = 1e-9;
constexpr double kSqrtClamp = 1e-12;
}  // namespace

double PureState2Q::norm_squared() const {
  double s = 0.0;
  for (const auto& a : c) s += std::norm(a);
  return s;
}

PureState2Q PureState2Q::normalized() const {
  const double n = std::sqrt(norm_squared());
  PureState2Q out = *this;
  for (auto& a : out.c) a /= n;
  return out;
}

ComplexMatrix PureState2Q::projector() const {
  ComplexMatrix p(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p(i, j) = c[i] * std::conj(c[j]);
  return p;
}

double DensityMatrix2Q::purity() const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(rho(i, j));
  return s;  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho
}

ValidationReport validate(const PureState2Q& psi) {
  ValidationReport report;
  for (const auto& a : psi.c) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      report.ok = false;
      report.violations.push_back({"finite", std::numeric_limits<double>::infinity()});
      return report;
    }
  }
  const double defect = std::abs(psi.norm_squared() - 1.0);
  if (defect > kNormTol) {
    report.ok = false;
    report.violations.push_back({"norm", defect});
  }
  return report;
}

ValidationReport validate(const DensityMatrix2Q& state) {
  ValidationReport report;
  if (!is_finite(state.rho)) {
    report.ok = false;
    report.violations.push_back({"finite", std::numeric_limits<double>::infinity()});
    return report;
  }
  const double herm = hermiticity_defect(state.rho);
  if (herm > kHermTol) {
    report.ok = false;
    report.violations.push_back({"hermiticity", herm});
  }
  const double tr = std::abs(trace(state.rho) - cdouble{1.0, 0.0});
  if (tr > kTraceTol) {
    report.ok = false;
    report.violations.push_back({"trace", tr});
  }
  if (herm <= kHermTol) {
    const auto eigs = hermitian_eigenvalues(state.rho);
    if (eigs[0] < -kEigTol) {
      report.ok = false;
      report.violations.push_back({"positivity", -eigs[0]});
    }
  }
  return report;
}

ComplexMatrix reduced_state(const PureState2Q& psi, Subsystem keep) {
  ComplexMatrix r(2);
  const auto& c = psi.c;
  if (keep == Subsystem::A) {
    // amplitude index = 2a + b
    r(0, 0) = std::norm(c[0]) + std::norm(c[1]);
    r(0, 1) = c[0] * std::conj(c[2]) + c[1] * std::conj(c[3]);
    r(1, 0) = std::conj(r(0, 1));
    r(1, 1) = std::norm(c[2]) + std::norm(c[3]);
  } else {
    r(0, 0) = std::norm(c[0]) + std::norm(c[2]);
    r(0, 1) = c[0] * std::conj(c[1]) + c[2] * std::conj(c[3]);
    r(1, 0) = std::conj(r(0, 1));
    r(1, 1) = std::norm(c[1]) + std::norm(c[3]);
  }
  return r;
}

double concurrence_pure(const PureState2Q& psi) {
  const double c = 2.0 * std::abs(psi.c[0] * psi.c[3] - psi.c[1] * psi.c[2]);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_from_reduction(const PureState2Q& psi) {
  const ComplexMatrix ra = reduced_state(psi, Subsystem::A);
  const double det = ra(0, 0).real() * ra(1, 1).real() - std::norm(ra(0, 1));
  return std::sqrt(std::max(0.0, 4.0 * det));
}

ComplexMatrix spin_flip(const ComplexMatrix& m) {
  // sigma_y x sigma_y is anti-diagonal (-1, 1, 1, -1); conjugation by it
  // reverses both indices and applies sign(i) sign(j).
  static constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix out(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out(i, j) = sign[i] * sign[j] * std::conj(m(3 - i, 3 - j));
  return out;
}

double concurrence_mixed(const DensityMatrix2Q& state) {
  // The Wootters lambdas are sqrt(eig(sqrt(rho) rho~ sqrt(rho))), i.e. the
  // singular values of A = sqrt(rho) Y conj(sqrt(rho)), since A A^dag
  // equals that Hermitian product. The direct SVD keeps the small ones at
  // round-off accuracy, where the sqrt-of-eigenvalue route would blur them
  // to ~1e-8 at rank-deficient states.
  static constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  const ComplexMatrix root = psd_sqrt(state.rho);
  ComplexMatrix a(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cdouble sum = 0.0;
      for (int k = 0; k < 4; ++k)
        sum += root(i, k) * sign[k] * std::conj(root(3 - k, j));
      a(i, j) = sum;
    }
  const auto lambda = singular_values(a);
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace qsl2q
