#include "qsl2q/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsl2q/errors.hpp"
#include "qsl2q/golden.hpp"

namespace qsl2q {

namespace {

constexpr double kFidelityTol = 1e-12;

double clamp_fidelity(const char* who, double f) {
  if (f < -kFidelityTol || f > 1.0 + kFidelityTol)
    throw OutOfRangeError(std::string(who) + ": fidelity " + std::to_string(f) +
                          " outside [0, 1]");
  return std::clamp(f, 0.0, 1.0);
}

// (1-q) * theta(q, F) on the feasible set 4 q (1-q) >= 1-F.
double energy_cost(double q, double one_minus_f) {
  const double denom = 2.0 * q * (1.0 - q);
  const double cos_theta = std::clamp(1.0 - one_minus_f / denom, -1.0, 1.0);
  return (1.0 - q) * std::acos(cos_theta);
}

}  // namespace

double beta_bound(double fidelity) {
  const double f = clamp_fidelity("beta_bound", fidelity);
  return (2.0 / M_PI) * std::acos(std::sqrt(f));
}

double alpha_bound_direct(double fidelity, double q_tol) {
  const double f = clamp_fidelity("alpha_bound_direct", fidelity);
  if (f >= 1.0) return 0.0;
  const double u = 1.0 - f;
  // Feasible q interval: |q - 1/2| <= sqrt(F)/2, with theta = pi at the ends.
  const double half_width = 0.5 * std::sqrt(f);
  const double q_lo = 0.5 - half_width;
  const double q_hi = 0.5 + half_width;
  if (q_hi - q_lo < q_tol) return 1.0;  // F ~ 0: q pinned at 1/2, theta = pi

  const auto cost = [u](double q) { return energy_cost(q, u); };

  const int scan_points = 2000;
  double best_q = q_hi;
  double best = cost(q_hi);
  for (int i = 0; i <= scan_points; ++i) {
    const double q = q_lo + (q_hi - q_lo) * static_cast<double>(i) / scan_points;
    const double value = cost(q);
    if (value < best) {
      best = value;
      best_q = q;
    }
  }
  const double step = (q_hi - q_lo) / scan_points;
  const double lo = std::max(q_lo, best_q - step);
  const double hi = std::min(q_hi, best_q + step);
  const auto refined = golden_section_min(cost, lo, hi, q_tol);
  return (2.0 / M_PI) * std::min(best, refined.second);
}

AlphaTable::AlphaTable(int grid_size) {
  if (grid_size < 101) throw OutOfDomainError("AlphaTable: grid_size must be >= 101");
  f_.resize(grid_size);
  a_.resize(grid_size);
  // Chebyshev-style node clustering: both alpha and beta have sqrt-type
  // endpoints, so uniform grids would lose interpolation accuracy there.
  for (int i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / (grid_size - 1);
    f_[i] = 0.5 * (1.0 - std::cos(M_PI * t));
  }
  f_.front() = 0.0;
  f_.back() = 1.0;
  for (int i = 0; i < grid_size; ++i) a_[i] = alpha_bound_direct(f_[i]);
  a_.front() = 1.0;
  a_.back() = 0.0;

  for (int i = 0; i + 1 < grid_size; ++i) {
    if (a_[i + 1] >= a_[i])
      throw Error("AlphaTable: tabulated alpha not strictly decreasing near F = " +
                  std::to_string(f_[i]));
    if (a_[i] > beta_bound(f_[i]) + 1e-12)
      throw Error("AlphaTable: alpha exceeds beta at F = " + std::to_string(f_[i]));
  }

  // Fritsch-Carlson tangents: harmonic-mean of adjacent secants, zeroed
  // when the secants disagree in sign. Keeps the interpolant monotone.
  const int n = grid_size;
  std::vector<double> secant(n - 1);
  for (int i = 0; i < n - 1; ++i) secant[i] = (a_[i + 1] - a_[i]) / (f_[i + 1] - f_[i]);
  slope_.assign(n, 0.0);
  slope_[0] = secant[0];
  slope_[n - 1] = secant[n - 2];
  for (int i = 1; i < n - 1; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      const double w1 = 2.0 * (f_[i + 1] - f_[i]) + (f_[i] - f_[i - 1]);
      const double w2 = (f_[i + 1] - f_[i]) + 2.0 * (f_[i] - f_[i - 1]);
      slope_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
    }
  }
}

double AlphaTable::operator()(double fidelity) const {
  const double f = clamp_fidelity("AlphaTable", fidelity);
  const auto it = std::upper_bound(f_.begin(), f_.end(), f);
  if (it == f_.begin()) return a_.front();
  if (it == f_.end()) return a_.back();
  const int i = static_cast<int>(it - f_.begin()) - 1;
  const double h = f_[i + 1] - f_[i];
  const double t = (f - f_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * a_[i] + h10 * h * slope_[i] + h01 * a_[i + 1] + h11 * h * slope_[i + 1];
}

QslBound qsl_time(double mean_energy, double energy_spread, double fidelity,
                  const AlphaTable& table) {
  const double f = clamp_fidelity("qsl_time", fidelity);
  if (mean_energy <= 0.0 && energy_spread <= 0.0 && f < 1.0)
    throw BothDegenerateError("qsl_time: E = dE = 0 cannot reach fidelity below 1");

  constexpr double inf = std::numeric_limits<double>::infinity();
  QslBound out;
  out.t_energy = mean_energy > 0.0 ? table(f) * M_PI / (2.0 * mean_energy) : (f < 1.0 ? inf : 0.0);
  out.t_spread =
      energy_spread > 0.0 ? beta_bound(f) * M_PI / (2.0 * energy_spread) : (f < 1.0 ? inf : 0.0);
  if (out.t_energy > out.t_spread) {
    out.t_bound = out.t_energy;
    out.branch = Branch::Energy;
  } else {
    out.t_bound = out.t_spread;
    out.branch = Branch::Spread;
  }
  return out;
}

}  // namespace qsl2q
