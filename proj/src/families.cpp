#include "qsl2q/families.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "qsl2q/sampling.hpp"

namespace qsl2q {

namespace {

constexpr double kRadicandClamp = 1e-10;

double checked_sqrt(const char* who, double radicand) {
  if (radicand < 0.0) {
    if (radicand < -kRadicandClamp)
      throw NegativeRadicandError(std::string(who) + ": radicand " + std::to_string(radicand));
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace

DensityMatrix2Q MemsState::matrix() const {
  const double gx = g();
  DensityMatrix2Q out;
  out.rho(0, 0) = gx;
  out.rho(1, 1) = 1.0 - 2.0 * gx;
  out.rho(2, 2) = 0.0;
  out.rho(3, 3) = gx;
  out.rho(0, 3) = 0.5 * x;
  out.rho(3, 0) = 0.5 * x;
  return out;
}

MemsState mems(double x) {
  if (x < 0.0 || x > 1.0) throw OutOfDomainError("mems: x outside [0, 1]");
  return MemsState{x};
}

DensityMatrix2Q IhState::matrix() const {
  DensityMatrix2Q out;
  out.rho(0, 0) = p2;
  out.rho(1, 1) = 0.5 * (p3 + p1);
  out.rho(2, 2) = 0.5 * (p3 + p1);
  out.rho(3, 3) = p4;
  out.rho(1, 2) = 0.5 * (p3 - p1);
  out.rho(2, 1) = 0.5 * (p3 - p1);
  return out;
}

IhState ih(double p1, double p2, double p3, double p4) {
  if (p4 < -1e-12) throw OutOfDomainError("ih: negative eigenvalue");
  if (p1 < p2 || p2 < p3 || p3 < p4)
    throw UnorderedEigenvaluesError("ih: eigenvalues must satisfy p1 >= p2 >= p3 >= p4");
  if (std::abs(p1 + p2 + p3 + p4 - 1.0) > 1e-12)
    throw OutOfDomainError("ih: eigenvalues must sum to 1");
  return IhState{p1, p2, p3, std::max(0.0, p4)};
}

IhState sample_ih(RandomStream& rng) {
  SpectrumSimplex s = sample_simplex(4, rng);
  std::sort(s.lambdas.begin(), s.lambdas.end(), std::greater<>());
  return IhState{s.lambdas[0], s.lambdas[1], s.lambdas[2], s.lambdas[3]};
}

double mems_fidelity_analytic(double x, double omega, const LocalHamiltonian& h) {
  if (x < 0.0 || x > 1.0) throw OutOfDomainError("mems_fidelity_analytic: x outside [0, 1]");
  const double g = mems(x).g();
  const double cosp = std::cos(h.delta_plus() * omega);
  // The corner block contributes sqrt(tr(XY) + 2 sqrt(det X det Y)) to the
  // fidelity trace; the nested two-radical form with inner radicand
  // x^2 (cos+1)(8 g^2 + x^2 (cos-1)) collapses to this single radical, which
  // stays stable where the nested one cancels catastrophically.
  const double block = 4.0 * g * g + 0.5 * x * x * (cosp - 1.0);
  const double t = 1.0 - 2.0 * g + checked_sqrt("mems_fidelity_analytic", block);
  return std::clamp(t * t, 0.0, 1.0);
}

double mems_fidelity_radicand_variant(double x, double omega, const LocalHamiltonian& h) {
  const double g = mems(x).g();
  const double cosp = std::cos(h.delta_plus() * omega);
  const double a = 1.0 - 2.0 * g;
  const double b = 4.0 * g * g + x * x * cosp;
  const double c = x * x * (cosp - 1.0) * (8.0 * g * g + x * x * (cosp - 1.0));
  const double root_c = std::sqrt(std::max(0.0, c));
  const double hi = std::sqrt(std::max(0.0, b + root_c));
  const double lo = std::sqrt(std::max(0.0, b - root_c));
  const double t = a + 0.5 * (hi + lo);
  return t * t;
}

double ih_fidelity_analytic(const IhState& p, double omega, const LocalHamiltonian& h) {
  const double cosm = std::cos(h.delta_minus() * omega);
  const double sum = p.p1 + p.p3;
  const double diff = p.p1 - p.p3;
  // same collapse as the MEMS case, with the middle block's
  // det X = p1 p3 and 2 tr(XY) = (p1+p3)^2 + (p1-p3)^2 cos
  const double block = 0.5 * (sum * sum + diff * diff * cosm) + 2.0 * p.p1 * p.p3;
  const double t = p.p2 + p.p4 + checked_sqrt("ih_fidelity_analytic", block);
  return std::clamp(t * t, 0.0, 1.0);
}

std::pair<double, double> mems_energy_analytic(double x, const LocalHamiltonian& h) {
  const double g = mems(x).g();
  const double e = h.delta_b + g * h.delta_minus();
  const double radicand = g * (h.delta_a * h.delta_a + h.delta_b * h.delta_b) -
                          g * g * h.delta_minus() * h.delta_minus();
  return {e, checked_sqrt("mems_energy_analytic", radicand)};
}

IhEnergyAudit ih_energy_analytic(const IhState& p, const LocalHamiltonian& h) {
  const DensityMatrix2Q rho = p.matrix();
  IhEnergyAudit audit;
  audit.e_trace = mean_energy(rho, h);
  audit.de_trace = energy_spread(rho, h);

  const double dp = h.delta_plus();
  const double dm = h.delta_minus();
  audit.e_closed_form = 0.5 * (p.p1 * dm + (p.p3 + 2.0 * p.p4) * dp);
  const double second = 0.5 * (2.0 * p.p1 * dp * dm + 2.0 * (p.p3 + 2.0 * p.p4) * dp * dp);
  const double variance = 0.5 * second - audit.e_closed_form * audit.e_closed_form;
  audit.de_closed_form = variance >= 0.0 ? std::sqrt(variance) : std::nan("");

  audit.e_difference = audit.e_trace - audit.e_closed_form;
  audit.de_difference = audit.de_trace - audit.de_closed_form;
  return audit;
}

double family_omega_min(StateFamily kind, const LocalHamiltonian& h) {
  if (kind == StateFamily::Mems) return M_PI / h.delta_plus();
  if (std::abs(h.delta_minus()) < 1e-14)
    throw StationaryError("family_omega_min: ordered-spectrum states are stationary when "
                          "delta_a = delta_b");
  return M_PI / std::abs(h.delta_minus());
}

double mems_speed_ratio(double x, const LocalHamiltonian& h, const AlphaTable& table) {
  if (x <= 0.0 || x > 1.0) throw OutOfDomainError("mems_speed_ratio: x outside (0, 1]");
  const double omega_min = family_omega_min(StateFamily::Mems, h);
  const double f_min = mems_fidelity_analytic(x, omega_min, h);
  const auto [e, de] = mems_energy_analytic(x, h);
  if (e + 1e-12 < de) {
    std::cerr << "mems_speed_ratio: E < dE at x = " << x
              << ", falling back to the generic max-branch bound\n";
    return omega_min / qsl_time(e, de, f_min, table).t_bound;
  }
  return omega_min * de / std::acos(std::sqrt(f_min));
}

}  // namespace qsl2q
