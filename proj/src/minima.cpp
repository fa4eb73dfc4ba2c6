#include "qsl2q/minima.hpp"

#include <cmath>

#include "qsl2q/golden.hpp"

namespace qsl2q {

namespace {

constexpr double kPlateauGuard = 1e-13;

bool nearly_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) < tol;
}

bool is_h1(const LocalHamiltonian& h) { return h.delta_a == 1.0 && h.delta_b == 1.0; }

// Golden-section alone localizes a smooth minimum only to about
// sqrt(noise / curvature) ~ 1e-8. Bisecting the sign of a wide central
// difference pushes the argmin down to ~1e-10 against function noise of
// order 1e-15.
std::optional<double> refine_by_slope_bisection(const std::function<double(double)>& f,
                                                double lo, double hi, double tol) {
  constexpr double h = 1e-5;
  const auto slope_positive = [&](double x) { return f(x + h) - f(x - h) > 0.0; };
  if (!slope_positive(hi) || slope_positive(lo)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope_positive(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double scan_window(const LocalHamiltonian& h) {
  for (int k = 1; k <= 32; ++k) {
    if (nearly_integer(h.delta_a * k) && nearly_integer(h.delta_b * k))
      return 2.0 * M_PI * k;
  }
  return 64.0 * M_PI;
}

std::optional<FirstMinimum> first_minimum_of(const std::function<double(double)>& f,
                                             double window, const ScanOptions& opts) {
  const int n_steps = static_cast<int>(std::ceil(window / opts.scan_step));
  const double step = window / n_steps;

  double prev = f(0.0);
  int descent_at = -1;
  double omega_prev = 0.0;
  for (int k = 1; k <= n_steps; ++k) {
    const double omega = k * step;
    const double value = f(omega);
    if (descent_at < 0) {
      if (value < prev - kPlateauGuard) descent_at = k;
    } else if (value > prev + kPlateauGuard) {
      // prev was the discrete minimum; bracket it by one step on each side
      const double lo = std::max(0.0, omega_prev - step);
      const double hi = omega;
      const double coarse =
          golden_section_min(f, lo, hi, std::max(opts.refine_tol, 1e-4)).first;
      const double half = std::min(1e-4, 0.5 * (hi - lo));
      const auto refined = refine_by_slope_bisection(f, std::max(lo, coarse - half),
                                                     std::min(hi, coarse + half),
                                                     opts.refine_tol);
      const double omega_min =
          refined ? *refined : golden_section_min(f, lo, hi, opts.refine_tol).first;
      return FirstMinimum{omega_min, f(omega_min), FirstMinimum::Method::NumericScan};
    }
    prev = value;
    omega_prev = omega;
  }
  return std::nullopt;
}

std::optional<FirstMinimum> first_minimum(const PureState2Q& psi, const LocalHamiltonian& h,
                                          const ScanOptions& opts) {
  if (is_h1(h)) {
    const double a = std::norm(psi.c[0]);
    const double b = std::norm(psi.c[1]) + std::norm(psi.c[2]);
    const double d = std::norm(psi.c[3]);
    // Stationary populations: fidelity never drops.
    if (a * d < 1e-14 && b * (a + d) < 1e-14) return std::nullopt;
    const double omega = omega_min_pure_h1(psi);
    return FirstMinimum{omega, fidelity_pure_h1_closed(psi, omega),
                        FirstMinimum::Method::AnalyticH1};
  }
  const auto f = [&psi, &h](double omega) {
    return fidelity_pure(psi, evolve_pure(psi, omega, h));
  };
  return first_minimum_of(f, scan_window(h), opts);
}

std::optional<FirstMinimum> first_minimum(const DensityMatrix2Q& rho, const LocalHamiltonian& h,
                                          const ScanOptions& opts) {
  const MixedFidelityEvaluator f(rho, h);
  return first_minimum_of([&f](double omega) { return f(omega); }, scan_window(h), opts);
}

PureState2Q orthogonal_family_state(const OrthogonalFamilyPoint& p) {
  if (p.omega < M_PI / 2.0 - 1e-12 || p.omega > M_PI + 1e-12)
    throw OutOfDomainError("orthogonal_family_state: omega outside [pi/2, pi]");
  if (p.delta < -1e-12 || p.delta > 1.0 + 1e-12)
    throw OutOfDomainError("orthogonal_family_state: delta outside [0, 1]");

  const double cos_omega = std::cos(p.omega);
  const double gamma = 1.0 / (2.0 * (1.0 - cos_omega));
  // cos(omega) <= 0 on the domain up to round-off at pi/2
  const double p1 = std::max(0.0, -2.0 * p.delta * gamma * cos_omega);
  const double p2 = std::max(0.0, -2.0 * (1.0 - p.delta) * gamma * cos_omega);

  PureState2Q psi;
  psi.c[0] = std::sqrt(gamma);
  psi.c[1] = std::sqrt(p1);
  psi.c[2] = std::sqrt(p2);
  psi.c[3] = std::sqrt(gamma);
  return psi.normalized();
}

PureState2Q fast_state(double f_min) {
  if (f_min < 0.0 || f_min > 1.0) throw OutOfDomainError("fast_state: F_min outside [0, 1]");
  const double root = std::sqrt(f_min);
  PureState2Q psi;
  psi.c[0] = std::sqrt(0.5 * (1.0 + root));
  psi.c[3] = std::sqrt(0.5 * (1.0 - root));
  return psi;
}

std::pair<double, double> fast_state_ratios(double f_min, const AlphaTable& table) {
  if (f_min < 0.0 || f_min >= 1.0)
    throw OutOfDomainError("fast_state_ratios: F_min outside [0, 1)");
  const double ratio_p1 = (1.0 - std::sqrt(f_min)) / table(f_min);
  const double ratio_p2 = std::sqrt(1.0 - f_min) / beta_bound(f_min);
  return {ratio_p1, ratio_p2};
}

}  // namespace qsl2q
