#include "qsl2q/dynamics.hpp"

#include <cmath>

namespace qsl2q {

namespace {
constexpr double kVarianceClamp = 1e-12;

double spread_from_moments(double second_moment, double mean) {
  double variance = second_moment - mean * mean;
  if (variance < 0.0) {
    if (variance < -kVarianceClamp)
      throw NegativeVarianceError("energy_spread: variance " + std::to_string(variance));
    variance = 0.0;
  }
  return std::sqrt(variance);
}
}  // namespace

ComplexMatrix LocalHamiltonian::matrix() const {
  const auto e = levels();
  return ComplexMatrix::diagonal(std::span<const double>(e.data(), 4));
}

PureState2Q evolve_pure(const PureState2Q& psi, double omega, const LocalHamiltonian& h) {
  const auto e = h.levels();
  PureState2Q out;
  for (int k = 0; k < 4; ++k)
    out.c[k] = psi.c[k] * std::polar(1.0, -e[k] * omega);
  return out;
}

DensityMatrix2Q evolve_mixed(const DensityMatrix2Q& state, double omega, const LocalHamiltonian& h) {
  const auto e = h.levels();
  DensityMatrix2Q out;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      out.rho(j, k) = state.rho(j, k) * std::polar(1.0, -(e[j] - e[k]) * omega);
  return out;
}

double mean_energy(const PureState2Q& psi, const LocalHamiltonian& h) {
  const auto e = h.levels();
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += std::norm(psi.c[k]) * e[k];
  return sum;
}

double mean_energy(const DensityMatrix2Q& state, const LocalHamiltonian& h) {
  const auto e = h.levels();
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += state.rho(k, k).real() * e[k];
  return sum;
}

double energy_spread(const PureState2Q& psi, const LocalHamiltonian& h) {
  const auto e = h.levels();
  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double p = std::norm(psi.c[k]);
    m1 += p * e[k];
    m2 += p * e[k] * e[k];
  }
  return spread_from_moments(m2, m1);
}

double energy_spread(const DensityMatrix2Q& state, const LocalHamiltonian& h) {
  const auto e = h.levels();
  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double p = state.rho(k, k).real();
    m1 += p * e[k];
    m2 += p * e[k] * e[k];
  }
  return spread_from_moments(m2, m1);
}

}  // namespace qsl2q
