#include <doctest.h>

#include <cmath>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/families.hpp"
#include "qsl2q/linalg.hpp"
#include "qsl2q/sampling.hpp"

using namespace qsl2q;

namespace {

PureState2Q bell_phi_plus() {
  PureState2Q psi;
  psi.c[0] = psi.c[3] = 1.0 / std::sqrt(2.0);
  return psi;
}

PureState2Q basis_state(int k) {
  PureState2Q psi;
  psi.c[k] = 1.0;
  return psi;
}

}  // namespace

TEST_SUITE_BEGIN("states");

TEST_CASE("validation accepts good states and reports defects") {
  DensityMatrix2Q mixed;
  for (int i = 0; i < 4; ++i) mixed.rho(i, i) = 0.25;
  CHECK(validate(mixed).ok);

  DensityMatrix2Q off;
  for (int i = 0; i < 4; ++i) off.rho(i, i) = 0.225;  // trace 0.9
  const auto report = validate(off);
  CHECK_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == "trace");
  CHECK(report.violations[0].magnitude == doctest::Approx(0.1).epsilon(1e-12));

  for (int trial = 0; trial < 20; ++trial) {
    RandomStream rng(200, trial);
    CHECK(validate(sample_mixed_state(rng)).ok);
    CHECK(validate(sample_pure_state(rng)).ok);
  }

  PureState2Q unnormalized;
  unnormalized.c[0] = 2.0;
  CHECK_FALSE(validate(unnormalized).ok);
}

TEST_CASE("reduced states of product and Bell states") {
  for (const Subsystem side : {Subsystem::A, Subsystem::B}) {
    const ComplexMatrix r00 = reduced_state(basis_state(0), side);
    CHECK(r00(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(r00(1, 1)) < 1e-15);

    const ComplexMatrix rb = reduced_state(bell_phi_plus(), side);
    CHECK(rb(0, 0).real() == doctest::Approx(0.5));
    CHECK(rb(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(rb(0, 1)) < 1e-15);
  }
}

TEST_CASE("both reductions share a spectrum") {
  for (int trial = 0; trial < 200; ++trial) {
    RandomStream rng(201, trial);
    const PureState2Q psi = sample_pure_state(rng);
    const auto ea = hermitian_eigenvalues(reduced_state(psi, Subsystem::A));
    const auto eb = hermitian_eigenvalues(reduced_state(psi, Subsystem::B));
    CHECK(std::abs(ea[0] - eb[0]) < 1e-12);
    CHECK(std::abs(ea[1] - eb[1]) < 1e-12);
  }
}

TEST_CASE("pure concurrence anchors") {
  CHECK(concurrence_pure(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_pure(basis_state(1)) == 0.0);

  // fastest state at depth 0.35: C = sqrt(1 - 0.35) = 0.806
  PureState2Q fast;
  fast.c[0] = std::sqrt(0.5 * (1.0 + std::sqrt(0.35)));
  fast.c[3] = std::sqrt(0.5 * (1.0 - std::sqrt(0.35)));
  CHECK(concurrence_pure(fast) == doctest::Approx(0.806).epsilon(1e-3));
  CHECK(concurrence_pure(fast) == doctest::Approx(std::sqrt(0.65)).epsilon(1e-12));
}

TEST_CASE("determinant route equals the amplitude route") {
  CHECK(concurrence_from_reduction(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_from_reduction(basis_state(2)) == 0.0);
  for (int trial = 0; trial < 10000; ++trial) {
    RandomStream rng(202, trial);
    const PureState2Q psi = sample_pure_state(rng);
    CHECK(std::abs(concurrence_from_reduction(psi) - concurrence_pure(psi)) < 1e-10);
  }
}

TEST_CASE("pure concurrence is invariant under compatible local phases") {
  for (int trial = 0; trial < 100; ++trial) {
    RandomStream rng(203, trial);
    PureState2Q psi = sample_pure_state(rng);
    const double reference = concurrence_pure(psi);
    // theta0 + theta3 = theta1 + theta2 leaves c0 c3 - c1 c2 unchanged up
    // to a global phase
    const double t0 = 2.0 * M_PI * rng.uniform01();
    const double t1 = 2.0 * M_PI * rng.uniform01();
    const double t2 = 2.0 * M_PI * rng.uniform01();
    const double t3 = t1 + t2 - t0;
    psi.c[0] *= std::polar(1.0, t0);
    psi.c[1] *= std::polar(1.0, t1);
    psi.c[2] *= std::polar(1.0, t2);
    psi.c[3] *= std::polar(1.0, t3);
    CHECK(concurrence_pure(psi) == doctest::Approx(reference).epsilon(1e-12));
  }
}

TEST_CASE("wootters concurrence of the maximally entangled mixed family") {
  for (const double x : {0.1, 0.5, 0.9}) {
    CHECK(concurrence_mixed(mems(x).matrix()) == doctest::Approx(x).epsilon(1e-10));
  }

  DensityMatrix2Q maximally_mixed;
  for (int i = 0; i < 4; ++i) maximally_mixed.rho(i, i) = 0.25;
  CHECK(concurrence_mixed(maximally_mixed) == 0.0);
}

TEST_CASE("wootters concurrence reduces to the pure formula on projectors") {
  for (int trial = 0; trial < 1000; ++trial) {
    RandomStream rng(204, trial);
    const PureState2Q psi = sample_pure_state(rng);
    DensityMatrix2Q rho;
    rho.rho = psi.projector();
    CHECK(std::abs(concurrence_mixed(rho) - concurrence_pure(psi)) < 1e-9);
  }
}

TEST_CASE("concurrence is conserved under local evolution") {
  const LocalHamiltonian presets[2] = {LocalHamiltonian::preset_h1(),
                                       LocalHamiltonian::preset_h2()};
  for (const auto& h : presets) {
    for (int trial = 0; trial < 20; ++trial) {
      RandomStream rng(205, trial);
      const PureState2Q psi = sample_pure_state(rng);
      const DensityMatrix2Q rho = sample_mixed_state(rng);
      const double c_pure = concurrence_pure(psi);
      const double c_mixed = concurrence_mixed(rho);
      for (int k = 1; k <= 8; ++k) {
        const double omega = 2.0 * M_PI * k / 8.0;
        CHECK(std::abs(concurrence_pure(evolve_pure(psi, omega, h)) - c_pure) < 1e-10);
        CHECK(std::abs(concurrence_mixed(evolve_mixed(rho, omega, h)) - c_mixed) < 1e-10);
      }
    }
  }
}

TEST_CASE("concurrence bounds") {
  for (int trial = 0; trial < 500; ++trial) {
    RandomStream rng(206, trial);
    const double c = concurrence_mixed(sample_mixed_state(rng));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
  // product pure states have zero concurrence
  for (int trial = 0; trial < 100; ++trial) {
    RandomStream rng(207, trial);
    PureState2Q a, b;
    a.c[0] = rng.complex_normal();
    a.c[1] = rng.complex_normal();
    b.c[0] = rng.complex_normal();
    b.c[1] = rng.complex_normal();
    PureState2Q product;
    product.c[0] = a.c[0] * b.c[0];
    product.c[1] = a.c[0] * b.c[1];
    product.c[2] = a.c[1] * b.c[0];
    product.c[3] = a.c[1] * b.c[1];
    product = product.normalized();
    CHECK(concurrence_pure(product) < 1e-12);
  }
}

TEST_SUITE_END();
