#ifndef QSL2Q_DYNAMICS_HPP
#define QSL2Q_DYNAMICS_HPP

#include <array>

#include "qsl2q/states.hpp"

namespace qsl2q {

/// Local two-qubit Hamiltonian H = H_A x I + I x H_B with single-qubit
/// splittings delta_a, delta_b (in units of the energy scale, which is 1).
/// Diagonal in the computational basis with levels {0, dB, dA, dA+dB}.
struct LocalHamiltonian {
  double delta_a = 1.0;
  double delta_b = 1.0;

  std::array<double, 4> levels() const {
    return {0.0, delta_b, delta_a, delta_a + delta_b};
  }

  double delta_plus() const { return delta_a + delta_b; }
  double delta_minus() const { return delta_a - delta_b; }

  ComplexMatrix matrix() const;

  static LocalHamiltonian preset_h1() { return {1.0, 1.0}; }   // levels {0,1,1,2}
  static LocalHamiltonian preset_h2() { return {2.0, 1.0}; }   // levels {0,1,2,3}
};

/// c_k -> c_k exp(-i E_k Omega); Omega is time in units of hbar / energy scale.
PureState2Q evolve_pure(const PureState2Q& psi, double omega, const LocalHamiltonian& h);

/// rho_jk -> rho_jk exp(-i (E_j - E_k) Omega).
DensityMatrix2Q evolve_mixed(const DensityMatrix2Q& state, double omega, const LocalHamiltonian& h);

double mean_energy(const PureState2Q& psi, const LocalHamiltonian& h);
double mean_energy(const DensityMatrix2Q& state, const LocalHamiltonian& h);

/// sqrt(<H^2> - <H>^2); radicand clamped to zero above -1e-12, larger
/// violations throw NegativeVarianceError.
double energy_spread(const PureState2Q& psi, const LocalHamiltonian& h);
double energy_spread(const DensityMatrix2Q& state, const LocalHamiltonian& h);

}  // namespace qsl2q

#endif  // QSL2Q_DYNAMICS_HPP
