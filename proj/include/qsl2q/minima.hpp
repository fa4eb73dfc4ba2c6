#ifndef QSL2Q_MINIMA_HPP
#define QSL2Q_MINIMA_HPP

#include <functional>
#include <optional>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/fidelity.hpp"
#include "qsl2q/qsl.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q {

struct FirstMinimum {
  double omega = 0.0;
  double f_min = 1.0;
  enum class Method { AnalyticH1, NumericScan } method = Method::NumericScan;
};

struct ScanOptions {
  double scan_step = M_PI / 200.0;
  double refine_tol = 1e-10;
};

/// First local minimum of f on (0, window]: three-point descent/ascent
/// detection on a uniform grid (plateaus within a 1e-13 guard are walked
/// through), then golden-section refinement of the bracket. Empty when f
/// never leaves its initial value, e.g. stationary states.
std::optional<FirstMinimum> first_minimum_of(const std::function<double(double)>& f,
                                             double window, const ScanOptions& opts = {});

/// Scan window for a Hamiltonian: 2*pi for integer splittings, otherwise
/// the smallest common period up to the 64*pi cap.
double scan_window(const LocalHamiltonian& h);

/// Pure states under the equal-splitting Hamiltonian take the analytic
/// route; everything else scans numerically.
std::optional<FirstMinimum> first_minimum(const PureState2Q& psi, const LocalHamiltonian& h,
                                          const ScanOptions& opts = {});
std::optional<FirstMinimum> first_minimum(const DensityMatrix2Q& rho, const LocalHamiltonian& h,
                                          const ScanOptions& opts = {});

/// Point in the family of states that reach an exactly orthogonal state at
/// time omega under the equal-splitting Hamiltonian.
struct OrthogonalFamilyPoint {
  double omega = M_PI;     // in [pi/2, pi]
  double delta = 0.5;      // in [0, 1]
};

/// Nonnegative-real-amplitude representative:
/// |c0|^2 = |c3|^2 = Gamma, |c1|^2 = -2 delta Gamma cos(omega),
/// |c2|^2 = -2 (1-delta) Gamma cos(omega), Gamma = 1 / (2 (1 - cos omega)).
PureState2Q orthogonal_family_state(const OrthogonalFamilyPoint& p);

/// Fastest state reaching a given first-minimum depth: c1 = c2 = 0,
/// |c0|^2 = (1 + sqrt(F))/2, |c3|^2 = (1 - sqrt(F))/2. Its first minimum
/// sits at omega = pi/2 and its concurrence is sqrt(1 - F).
PureState2Q fast_state(double f_min);

/// Closed-form speed ratios of the fastest states on the two bound
/// branches: ((1 - sqrt(F))/alpha(F), sqrt(1-F)/beta(F)). Requires F < 1.
std::pair<double, double> fast_state_ratios(double f_min, const AlphaTable& table);

}  // namespace qsl2q

#endif  // QSL2Q_MINIMA_HPP
