#ifndef QSL2Q_QSL_HPP
#define QSL2Q_QSL_HPP

#include <vector>

namespace qsl2q {

/// beta(F) = (2/pi) arccos(sqrt(F)). Spread-based bound coefficient.
double beta_bound(double fidelity);

/// Tabulated energy-based bound coefficient alpha(F), with a
/// monotonicity-preserving cubic interpolant between nodes.
///
/// alpha(F) is defined through the two-level states that saturate the
/// energy bound: populations (q, 1-q) on levels (0, e) reach fidelity F
/// after a phase theta with cos(theta) = 1 - (1-F) / (2 q (1-q)), feasible
/// when 4 q (1-q) >= 1-F, and
///     alpha(F) = (2/pi) min_q (1-q) theta(q, F).
class AlphaTable {
 public:
  /// Builds a table with grid_size nodes (>= 101), clustered toward both
  /// endpoints where alpha has square-root behavior.
  explicit AlphaTable(int grid_size = 2001);

  double operator()(double fidelity) const;

  const std::vector<double>& f_grid() const { return f_; }
  const std::vector<double>& alpha_values() const { return a_; }

 private:
  std::vector<double> f_;
  std::vector<double> a_;
  std::vector<double> slope_;  // Fritsch-Carlson limited tangents
};

/// Direct minimization at a single F, no table. Used by the table builder
/// and by the interpolation accuracy checks.
double alpha_bound_direct(double fidelity, double q_tol = 1e-10);

enum class Branch { Energy, Spread };

/// Lower bound on the time to reach fidelity F from a state with mean
/// energy E (above the ground level) and spread dE; times in hbar / energy
/// scale units. t_bound = max of the two branches; ties go to Spread.
struct QslBound {
  double t_energy = 0.0;
  double t_spread = 0.0;
  double t_bound = 0.0;
  Branch branch = Branch::Spread;
};

QslBound qsl_time(double mean_energy, double energy_spread, double fidelity,
                  const AlphaTable& table);

}  // namespace qsl2q

#endif  // QSL2Q_QSL_HPP
