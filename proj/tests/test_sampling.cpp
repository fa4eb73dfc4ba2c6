#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qsl2q/audit.hpp"
#include "qsl2q/linalg.hpp"
#include "qsl2q/sampling.hpp"
#include "qsl2q/stats.hpp"

using namespace qsl2q;

TEST_SUITE_BEGIN("sampling");

TEST_CASE("haar unitaries are unitary") {
  for (int trial = 0; trial < 50; ++trial) {
    RandomStream rng(100, trial);
    const int n = 1 + static_cast<int>(rng.next_u64() % 8);
    const ComplexMatrix u = sample_haar_unitary(n, rng);
    CHECK(max_abs_diff(u * adjoint(u), ComplexMatrix::identity(n)) < 1e-12);
  }
}

TEST_CASE("dimension one draw is a pure phase") {
  RandomStream rng(101, 0);
  const ComplexMatrix u = sample_haar_unitary(1, rng);
  CHECK(std::abs(u(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(sample_haar_unitary(9, rng), DimensionMismatch);
}

TEST_CASE("eigenphases are uniform on the circle") {
  const int n_draws = 20000;
  std::vector<double> phases;
  phases.reserve(4 * n_draws);
  for (int i = 0; i < n_draws; ++i) {
    RandomStream rng(102, i);
    for (double t : unitary_eigenphases(sample_haar_unitary(4, rng))) phases.push_back(t);
  }
  const double d =
      ks_statistic(std::move(phases), [](double t) { return (t + M_PI) / (2.0 * M_PI); });
  CHECK(d < ks_critical(4 * n_draws, 0.01));
}

TEST_CASE("eigenphase extraction is exact on a known unitary") {
  // diag(e^{i 0.3}, e^{-i 2.9}, e^{i 1.7}, -1) conjugated by a Haar unitary
  const double target[4] = {0.3, -2.9, 1.7, M_PI};
  RandomStream rng(103, 7);
  const ComplexMatrix v = sample_haar_unitary(4, rng);
  ComplexMatrix u(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cdouble sum = 0.0;
      for (int k = 0; k < 4; ++k)
        sum += v(i, k) * std::polar(1.0, target[k]) * std::conj(v(j, k));
      u(i, j) = sum;
    }
  auto phases = unitary_eigenphases(u);
  std::sort(phases.begin(), phases.end());
  std::vector<double> expected(target, target + 4);
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 4; ++k)
    CHECK(phases[k] == doctest::Approx(expected[k]).epsilon(1e-9));
}

TEST_CASE("simplex draws are normalized and uniform") {
  const int n_draws = 200000;
  double mean0 = 0.0;
  double mean_max = 0.0;
  for (int i = 0; i < n_draws; ++i) {
    RandomStream rng(104, i);
    const SpectrumSimplex s = sample_simplex(4, rng);
    double sum = 0.0;
    for (double l : s.lambdas) {
      CHECK(l >= 0.0);
      sum += l;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    mean0 += s.lambdas[0];
    mean_max += *std::max_element(s.lambdas.begin(), s.lambdas.end());
  }
  CHECK(mean0 / n_draws == doctest::Approx(0.25).epsilon(4e-3));
  // flat-Dirichlet largest component has mean 25/48; cross-check against the
  // sorted-spacings construction
  double oracle = 0.0;
  for (int i = 0; i < n_draws; ++i) {
    RandomStream rng(105, i);
    const auto s = simplex_by_sorted_spacings(4, rng);
    oracle += *std::max_element(s.begin(), s.end());
  }
  CHECK(std::abs(mean_max / n_draws - oracle / n_draws) < 3e-3);
  CHECK(std::abs(mean_max / n_draws - 25.0 / 48.0) < 3e-3);

  RandomStream rng(104, 0);
  const SpectrumSimplex one = sample_simplex(1, rng);
  CHECK(one.lambdas[0] == 1.0);
}

TEST_CASE("mixed draws are valid states with the drawn spectrum") {
  for (int trial = 0; trial < 50; ++trial) {
    RandomStream rng(106, trial);
    const DensityMatrix2Q rho = sample_mixed_state(rng);
    CHECK(std::abs(trace(rho.rho).real() - 1.0) < 1e-12);
    CHECK(std::abs(trace(rho.rho).imag()) < 1e-14);
    CHECK(hermiticity_defect(rho.rho) < 1e-14);
    CHECK(hermitian_eigenvalues(rho.rho)[0] > -1e-12);
  }

  // spectrum equals the forced simplex point up to reordering
  RandomStream ru(107, 0);
  const ComplexMatrix u = sample_haar_unitary(4, ru);
  SpectrumSimplex d;
  d.lambdas = {0.4, 0.3, 0.2, 0.1};
  const DensityMatrix2Q rho = mixed_state_from(u, d);
  const auto eigs = hermitian_eigenvalues(rho.rho);
  for (int k = 0; k < 4; ++k)
    CHECK(eigs[k] == doctest::Approx(0.1 * (k + 1)).epsilon(1e-12));
}

TEST_CASE("forced pure spectrum gives a projector") {
  RandomStream rng(108, 0);
  const ComplexMatrix u = sample_haar_unitary(4, rng);
  SpectrumSimplex d;
  d.lambdas = {1.0, 0.0, 0.0, 0.0};
  const DensityMatrix2Q rho = mixed_state_from(u, d);
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pure draws are normalized with symmetric moments") {
  const int n_draws = 200000;
  double mean_p0 = 0.0;
  for (int i = 0; i < n_draws; ++i) {
    RandomStream rng(109, i);
    const PureState2Q psi = sample_pure_state(rng);
    CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    mean_p0 += std::norm(psi.c[0]);
  }
  CHECK(mean_p0 / n_draws == doctest::Approx(0.25).epsilon(4e-3));
}

TEST_CASE("pure measure matches the haar-column construction") {
  const int n = 50000;
  std::vector<double> direct(n), oracle(n);
  for (int i = 0; i < n; ++i) {
    RandomStream ra(110, i);
    RandomStream rb(111, i);
    direct[i] = concurrence_pure(sample_pure_state(ra));
    oracle[i] = concurrence_pure(pure_state_by_haar_column(rb));
  }
  const double d = ks_statistic_two_sample(direct, oracle);
  CHECK(d < ks_critical_two_sample(n, n, 0.01));
}

TEST_SUITE_END();
