#ifndef QSL2Q_STATES_HPP
#define QSL2Q_STATES_HPP

#include <array>
#include <string>
#include <vector>

#include "qsl2q/complex_matrix.hpp"

namespace qsl2q {

/// Two-qubit pure state: amplitudes on |00>, |01>, |10>, |11>.
struct PureState2Q {
  std::array<cdouble, 4> c{};

  cdouble& operator[](int i) { return c[i]; }
  const cdouble& operator[](int i) const { return c[i]; }

  double norm_squared() const;
  PureState2Q normalized() const;

  /// |ps><ps| as a 4x4 density matrix.
  ComplexMatrix projector() const;
};

/// Two-qubit mixed state: 4x4 Hermitian, unit trace, PSD within round-off.
struct DensityMatrix2Q {
  ComplexMatrix rho{4};

  double purity() const;  // Tr rho^2
};

enum class Subsystem { A, B };

/// One failed invariant with its magnitude, e.g. {"trace", 0.1}.
struct Violation {
  std::string kind;
  double magnitude = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const PureState2Q& psi);
ValidationReport validate(const DensityMatrix2Q& state);

/// Partial trace of |psi><psi| over the complementary qubit.
ComplexMatrix reduced_state(const PureState2Q& psi, Subsystem keep);

/// C = 2 |c0 c3 - c1 c2|, clamped into [0, 1].
double concurrence_pure(const PureState2Q& psi);

/// C = sqrt(4 det rho_A); agrees with concurrence_pure to round-off.
double concurrence_from_reduction(const PureState2Q& psi);

/// Wootters concurrence: max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4))
/// with mu_i the descending eigenvalues of rho (sy x sy) rho* (sy x sy),
/// computed from the Hermitian product sqrt(rho) rho~ sqrt(rho).
double concurrence_mixed(const DensityMatrix2Q& state);

/// (sigma_y x sigma_y) m* (sigma_y x sigma_y), the spin-flip of a two-qubit
/// operator in the computational basis.
ComplexMatrix spin_flip(const ComplexMatrix& m);

}  // namespace qsl2q

#endif  // QSL2Q_STATES_HPP
