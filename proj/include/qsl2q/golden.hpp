#ifndef QSL2Q_GOLDEN_HPP
#define QSL2Q_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace qsl2q {

/// Derivative-free golden-section minimization on [lo, hi].
/// Returns (argmin, value). Stops when the interval shrinks below tol or
/// after max_iter shrink steps.
template <typename Fn>
std::pair<double, double> golden_section_min(Fn&& f, double lo, double hi, double tol,
                                             int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace qsl2q

#endif  // QSL2Q_GOLDEN_HPP
