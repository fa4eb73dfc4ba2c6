#ifndef QSL2Q_TESTS_SUPPORT_TEST_HELPERS_HPP
#define QSL2Q_TESTS_SUPPORT_TEST_HELPERS_HPP

#include "qsl2q/complex_matrix.hpp"
#include "qsl2q/rng.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q::testing {

inline ComplexMatrix random_hermitian(int n, RandomStream& rng) {
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline ComplexMatrix random_matrix(int n, RandomStream& rng) {
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
  return a;
}

}  // namespace qsl2q::testing

#endif  // QSL2Q_TESTS_SUPPORT_TEST_HELPERS_HPP
