#include "qsl2q/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "qsl2q/linalg.hpp"

namespace qsl2q {

namespace {

constexpr double kEigClamp = 1e-12;

// Tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the nuclear norm of
// G = sqrt(rho) sqrt(sigma), and the direct SVD delivers the small
// singular values at round-off accuracy. Taking sqrt of eig(G G^dag)
// instead would smear exact zeros to ~1e-8.
double fidelity_from_root_product(const ComplexMatrix& g) {
  const auto sigma = singular_values(g);
  const double sum = sigma[0] + sigma[1] + sigma[2] + sigma[3];
  return std::clamp(sum * sum, 0.0, 1.0);
}

}  // namespace

double fidelity_pure(const PureState2Q& psi0, const PureState2Q& psi1) {
  cdouble overlap = 0.0;
  for (int k = 0; k < 4; ++k) overlap += std::conj(psi0.c[k]) * psi1.c[k];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

double fidelity_pure_h1_closed(const PureState2Q& psi, double omega) {
  const double a = std::norm(psi.c[0]);
  const double b = std::norm(psi.c[1]) + std::norm(psi.c[2]);
  const double d = std::norm(psi.c[3]);
  const cdouble z = std::polar(1.0, omega);
  return std::clamp(std::norm(a + b * z + d * z * z), 0.0, 1.0);
}

double fidelity_pure_h1_expanded_variant(const PureState2Q& psi, double omega) {
  const double a = std::norm(psi.c[0]);
  const double d = std::norm(psi.c[3]);
  const double s03 = a + d;
  const double p03 = a * d;
  return 2.0 * p03 * std::cos(2.0 * omega) + 2.0 * p03 * (1.0 - s03) * std::cos(omega) +
         (1.0 - s03) * (1.0 - s03) + a * a + d * d;
}

double omega_min_pure_h1(const PureState2Q& psi) {
  const double a = std::norm(psi.c[0]);
  const double d = std::norm(psi.c[3]);
  const double s03 = a + d;
  const double p03 = a * d;
  if (p03 < 1e-14) return M_PI;
  const double arg = std::clamp(-(1.0 - s03) * s03 / (4.0 * p03), -1.0, 0.0);
  return std::acos(arg);
}

double fidelity_mixed(const DensityMatrix2Q& rho, const DensityMatrix2Q& sigma) {
  return fidelity_from_root_product(psd_sqrt(rho.rho) * psd_sqrt(sigma.rho));
}

MixedFidelityEvaluator::MixedFidelityEvaluator(const DensityMatrix2Q& rho0,
                                               const LocalHamiltonian& h)
    : rho0_(rho0), h_(h), sqrt_rho0_(psd_sqrt(rho0.rho)) {}

double MixedFidelityEvaluator::operator()(double omega) const {
  // sqrt of the evolved state is the evolved sqrt: U sqrt(rho) U^dag, i.e.
  // the cached root with the usual entrywise phases
  const auto e = h_.levels();
  std::array<cdouble, 4> u;
  for (int k = 0; k < 4; ++k) u[k] = std::polar(1.0, -e[k] * omega);
  ComplexMatrix evolved_root(4);
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j)
      evolved_root(k, j) = u[k] * sqrt_rho0_(k, j) * std::conj(u[j]);
  return fidelity_from_root_product(sqrt_rho0_ * evolved_root);
}

}  // namespace qsl2q
