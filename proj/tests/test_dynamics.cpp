#include <doctest.h>

#include <cmath>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/fidelity.hpp"
#include "qsl2q/families.hpp"
#include "qsl2q/linalg.hpp"
#include "qsl2q/sampling.hpp"

using namespace qsl2q;

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("preset spectra") {
  const auto e1 = LocalHamiltonian::preset_h1().levels();
  CHECK(e1 == std::array<double, 4>{0.0, 1.0, 1.0, 2.0});
  const auto e2 = LocalHamiltonian::preset_h2().levels();
  CHECK(e2 == std::array<double, 4>{0.0, 1.0, 2.0, 3.0});
}

TEST_CASE("pure evolution basics") {
  const LocalHamiltonian h = LocalHamiltonian::preset_h1();
  RandomStream rng(300, 0);
  const PureState2Q psi = sample_pure_state(rng);

  const PureState2Q frozen = evolve_pure(psi, 0.0, h);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(frozen.c[k] - psi.c[k]) < 1e-15);

  PureState2Q ground;
  ground.c[0] = 1.0;
  const PureState2Q still = evolve_pure(ground, 1.7, h);
  CHECK(std::abs(still.c[0] - cdouble{1.0, 0.0}) < 1e-15);

  // integer spectrum: exact global recurrence at 2 pi
  const PureState2Q returned = evolve_pure(psi, 2.0 * M_PI, h);
  CHECK(fidelity_pure(psi, returned) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(evolve_pure(psi, 0.3, h).norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("mixed evolution reproduces the entrywise phase pattern") {
  const LocalHamiltonian h{2.0, 1.0};
  RandomStream rng(301, 0);
  const DensityMatrix2Q rho = sample_mixed_state(rng);
  const double omega = 0.83;
  const DensityMatrix2Q out = evolve_mixed(rho, omega, h);

  // element (0,1) gains e^{+i delta_b omega}, (0,2) e^{+i delta_a omega},
  // (0,3) e^{+i (delta_a + delta_b) omega}, (1,2) e^{+i (delta_a - delta_b) omega}
  const auto phase = [&](double e) { return std::polar(1.0, e * omega); };
  CHECK(std::abs(out.rho(0, 1) - rho.rho(0, 1) * phase(h.delta_b)) < 1e-14);
  CHECK(std::abs(out.rho(0, 2) - rho.rho(0, 2) * phase(h.delta_a)) < 1e-14);
  CHECK(std::abs(out.rho(0, 3) - rho.rho(0, 3) * phase(h.delta_plus())) < 1e-14);
  CHECK(std::abs(out.rho(1, 2) - rho.rho(1, 2) * phase(h.delta_minus())) < 1e-14);
  CHECK(std::abs(out.rho(1, 3) - rho.rho(1, 3) * phase(h.delta_a)) < 1e-14);
  CHECK(std::abs(out.rho(2, 3) - rho.rho(2, 3) * phase(h.delta_b)) < 1e-14);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(out.rho(i, i) - rho.rho(i, i)) < 1e-15);
}

TEST_CASE("diagonal states are stationary") {
  const double d[4] = {0.4, 0.3, 0.2, 0.1};
  DensityMatrix2Q rho;
  rho.rho = ComplexMatrix::diagonal(std::span<const double>(d, 4));
  const DensityMatrix2Q out = evolve_mixed(rho, 2.31, LocalHamiltonian::preset_h2());
  CHECK(max_abs_diff(out.rho, rho.rho) == 0.0);
}

TEST_CASE("mixed evolution agrees with the pure channel on projectors") {
  for (int trial = 0; trial < 50; ++trial) {
    RandomStream rng(302, trial);
    const PureState2Q psi = sample_pure_state(rng);
    const double omega = 4.0 * M_PI * rng.uniform01();
    const LocalHamiltonian h{1.0 + rng.uniform01(), 1.0 + rng.uniform01()};
    DensityMatrix2Q rho;
    rho.rho = psi.projector();
    const DensityMatrix2Q via_mixed = evolve_mixed(rho, omega, h);
    const ComplexMatrix via_pure = evolve_pure(psi, omega, h).projector();
    CHECK(max_abs_diff(via_mixed.rho, via_pure) < 1e-12);
  }
}

TEST_CASE("evolution preserves trace, hermiticity, spectrum and composes") {
  RandomStream rng(303, 0);
  const DensityMatrix2Q rho = sample_mixed_state(rng);
  const LocalHamiltonian h = LocalHamiltonian::preset_h2();
  const auto before = hermitian_eigenvalues(rho.rho);

  const DensityMatrix2Q one = evolve_mixed(rho, 1.1, h);
  const DensityMatrix2Q two = evolve_mixed(one, 0.7, h);
  const DensityMatrix2Q direct = evolve_mixed(rho, 1.8, h);
  CHECK(max_abs_diff(two.rho, direct.rho) < 1e-12);
  CHECK(std::abs(trace(one.rho).real() - 1.0) < 1e-12);
  CHECK(hermiticity_defect(one.rho) < 1e-14);
  const auto after = hermitian_eigenvalues(one.rho);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(after[k] - before[k]) < 1e-12);

  // 2 pi periodicity for integer splittings
  const DensityMatrix2Q cycled = evolve_mixed(rho, 2.0 * M_PI, h);
  CHECK(max_abs_diff(cycled.rho, rho.rho) < 1e-12);
}

TEST_CASE("energy anchors") {
  const LocalHamiltonian h1 = LocalHamiltonian::preset_h1();

  PureState2Q top;
  top.c[3] = 1.0;
  CHECK(mean_energy(top, h1) == doctest::Approx(2.0));
  CHECK(energy_spread(top, h1) == doctest::Approx(0.0));

  // fastest state at depth 0.35: E = 0.408, dE = 0.806
  PureState2Q fast;
  fast.c[0] = std::sqrt(0.5 * (1.0 + std::sqrt(0.35)));
  fast.c[3] = std::sqrt(0.5 * (1.0 - std::sqrt(0.35)));
  CHECK(mean_energy(fast, h1) == doctest::Approx(0.408).epsilon(1e-3));
  CHECK(energy_spread(fast, h1) == doctest::Approx(0.806).epsilon(1e-3));
  CHECK(mean_energy(fast, h1) == doctest::Approx(1.0 - std::sqrt(0.35)).epsilon(1e-12));
  CHECK(energy_spread(fast, h1) == doctest::Approx(std::sqrt(0.65)).epsilon(1e-12));
}

TEST_CASE("fast-state family moments match the closed forms") {
  const LocalHamiltonian h1 = LocalHamiltonian::preset_h1();
  for (const double f : {0.0, 0.25, 0.64}) {
    PureState2Q psi;
    psi.c[0] = std::sqrt(0.5 * (1.0 + std::sqrt(f)));
    psi.c[3] = std::sqrt(0.5 * (1.0 - std::sqrt(f)));
    CHECK(mean_energy(psi, h1) == doctest::Approx(1.0 - std::sqrt(f)).epsilon(1e-12));
    CHECK(energy_spread(psi, h1) == doctest::Approx(std::sqrt(1.0 - f)).epsilon(1e-12));
  }
}

TEST_CASE("trace oracle for the energy moments") {
  // implementation uses the diagonal shortcut; compare against full
  // matrix-product traces
  const LocalHamiltonian h = LocalHamiltonian::preset_h2();
  const ComplexMatrix hm = h.matrix();
  for (int trial = 0; trial < 50; ++trial) {
    RandomStream rng(304, trial);
    const DensityMatrix2Q rho = sample_mixed_state(rng);
    const double e_direct = trace(rho.rho * hm).real();
    const double e2_direct = trace(rho.rho * hm * hm).real();
    CHECK(mean_energy(rho, h) == doctest::Approx(e_direct).epsilon(1e-12));
    CHECK(energy_spread(rho, h) ==
          doctest::Approx(std::sqrt(e2_direct - e_direct * e_direct)).epsilon(1e-9));
  }

  // analytic family anchor under the asymmetric preset
  const auto [e, de] = mems_energy_analytic(0.5, h);
  const DensityMatrix2Q rho = mems(0.5).matrix();
  CHECK(e == doctest::Approx(mean_energy(rho, h)).epsilon(1e-12));
  CHECK(de == doctest::Approx(energy_spread(rho, h)).epsilon(1e-12));
}

TEST_SUITE_END();
