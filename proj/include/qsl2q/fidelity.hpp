#ifndef QSL2Q_FIDELITY_HPP
#define QSL2Q_FIDELITY_HPP

#include <vector>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q {

/// Sampled fidelity-vs-time curve, omegas ascending.
struct FidelityTrace {
  std::vector<double> omegas;
  std::vector<double> values;
};

/// |<psi0|psi1>|^2.
double fidelity_pure(const PureState2Q& psi0, const PureState2Q& psi1);

/// Self-fidelity under the equal-splitting Hamiltonian (delta_a = delta_b = 1),
/// evaluated as the phasor sum |a + b e^{i Omega} + d e^{2 i Omega}|^2 with
/// a = |c0|^2, b = |c1|^2 + |c2|^2, d = |c3|^2.
double fidelity_pure_h1_closed(const PureState2Q& psi, double omega);

/// Trigonometric expansion of the same curve with the cos(Omega) coefficient
/// written as 2 p03 (1 - s03) instead of 2 s03 (1 - s03). Kept only as an
/// audit channel: the deviation of each expansion from the evolve-and-overlap
/// route is reported by the `validate` command.
double fidelity_pure_h1_expanded_variant(const PureState2Q& psi, double omega);

/// Location of the first self-fidelity minimum under the equal-splitting
/// Hamiltonian: arccos(-(1 - s03) s03 / (4 p03)) with the argument clamped
/// into [-1, 0]; returns pi when p03 vanishes. Always in [pi/2, pi].
double omega_min_pure_h1(const PureState2Q& psi);

/// Uhlmann fidelity {Tr sqrt(sqrt(rho) sigma sqrt(rho))}^2, clamped into [0, 1].
double fidelity_mixed(const DensityMatrix2Q& rho, const DensityMatrix2Q& sigma);

/// Precomputes sqrt(rho0) once so a fidelity curve F(omega) against the
/// evolved state can be scanned cheaply.
class MixedFidelityEvaluator {
 public:
  MixedFidelityEvaluator(const DensityMatrix2Q& rho0, const LocalHamiltonian& h);

  double operator()(double omega) const;

 private:
  DensityMatrix2Q rho0_;
  LocalHamiltonian h_;
  ComplexMatrix sqrt_rho0_;
};

}  // namespace qsl2q

#endif  // QSL2Q_FIDELITY_HPP
