#ifndef QSL2Q_SAMPLING_HPP
#define QSL2Q_SAMPLING_HPP

#include <vector>

#include "qsl2q/complex_matrix.hpp"
#include "qsl2q/rng.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q {

/// Point on the probability simplex: lambdas >= 0, sum = 1.
struct SpectrumSimplex {
  std::vector<double> lambdas;
};

/// Haar-distributed n x n unitary (n <= 8): Ginibre matrix followed by
/// Gram-Schmidt QR with the R-diagonal phase fixed real positive, which is
/// the gauge choice that makes plain QR measure-exact.
ComplexMatrix sample_haar_unitary(int n, RandomStream& rng);

/// Uniform (flat Dirichlet) point on the (n-1)-simplex: n i.i.d. standard
/// exponentials normalized by their sum.
SpectrumSimplex sample_simplex(int n, RandomStream& rng);

/// rho = U D U^dag with U Haar and D a uniform simplex draw.
DensityMatrix2Q sample_mixed_state(RandomStream& rng);

/// As above but with the spectrum forced, for tests that pin D.
DensityMatrix2Q mixed_state_from(const ComplexMatrix& unitary, const SpectrumSimplex& spectrum);

/// Fubini-Study random pure state: 4 i.i.d. complex Gaussians, normalized.
PureState2Q sample_pure_state(RandomStream& rng);

}  // namespace qsl2q

#endif  // QSL2Q_SAMPLING_HPP
