#ifndef QSL2Q_AUDIT_HPP
#define QSL2Q_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsl2q/complex_matrix.hpp"
#include "qsl2q/rng.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q {

/// One row of the self-audit tables printed by `sample-audit` / `validate`.
/// `finding` rows document expected discrepancies (e.g. a closed-form
/// variant that disagrees with its oracle); they never fail the suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool finding = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string note;
};

bool all_passed(const std::vector<CheckResult>& results);

// --- independent reference constructions -----------------------------------
// Alternative algorithms used as oracles for the production samplers; they
// share no code path with the routines they check.

/// Uniform simplex point via sorted uniform spacings (order-statistics
/// construction) instead of normalized exponentials.
std::vector<double> simplex_by_sorted_spacings(int n, RandomStream& rng);

/// Random pure state as the first column of a Haar unitary.
PureState2Q pure_state_by_haar_column(RandomStream& rng);

/// Eigenphases of a unitary matrix in (-pi, pi], via the commuting Hermitian
/// pair (U + U^dag)/2 and (U - U^dag)/(2i), with degenerate-subspace
/// refinement.
std::vector<double> unitary_eigenphases(const ComplexMatrix& u);

// --- suites -----------------------------------------------------------------

/// Distributional checks of the samplers: unitarity, eigenphase KS,
/// left-invariance, simplex moments and marginals, purity, determinism.
std::vector<CheckResult> run_sampler_audit(std::uint64_t seed);

/// Oracle cross-checks of every closed form against its independent route,
/// plus the recorded-findings rows for the formula variants that fail their
/// oracles.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

}  // namespace qsl2q

#endif  // QSL2Q_AUDIT_HPP
