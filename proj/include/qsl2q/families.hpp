#ifndef QSL2Q_FAMILIES_HPP
#define QSL2Q_FAMILIES_HPP

#include <utility>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/qsl.hpp"
#include "qsl2q/rng.hpp"
#include "qsl2q/states.hpp"

namespace qsl2q {

/// Maximally entangled mixed state rho(x); its concurrence equals x.
/// Nonzero entries: diag (g, 1-2g, 0, g) and corners (1,4)/(4,1) = x/2,
/// with g(x) = 1/3 on [0, 2/3] and x/2 on [2/3, 1].
struct MemsState {
  double x = 0.0;

  double g() const { return x <= 2.0 / 3.0 ? 1.0 / 3.0 : 0.5 * x; }
  DensityMatrix2Q matrix() const;
};

MemsState mems(double x);

/// Spectrum-ordered state whose entanglement cannot be raised by unitary
/// gates: diag (p2, (p1+p3)/2, (p1+p3)/2, p4) with (p3-p1)/2 on the middle
/// off-diagonal; p1 >= p2 >= p3 >= p4 >= 0, sum 1.
struct IhState {
  double p1 = 1.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;

  DensityMatrix2Q matrix() const;
};

IhState ih(double p1, double p2, double p3, double p4);

/// Uniform simplex draw with components sorted descending.
IhState sample_ih(RandomStream& rng);

/// Closed-form self-fidelity of rho(x) after time omega; only the corner
/// phase moves, so the dependence is through cos((delta_a+delta_b) omega).
/// Matches the Uhlmann route to round-off.
double mems_fidelity_analytic(double x, double omega, const LocalHamiltonian& h);

/// Two-radical variant (A + (sqrt(B + sqrt(C)) + sqrt(B - sqrt(C)))/2)^2
/// with the inner radicand written as x^2 (cos - 1)(8 g^2 + x^2 (cos - 1)).
/// That sign fails to return 1 at omega = 0; kept only for the validation
/// audit. The (cos + 1) radicand collapses to the form used above.
double mems_fidelity_radicand_variant(double x, double omega, const LocalHamiltonian& h);

/// Closed-form self-fidelity of an ordered-spectrum state; depends on omega
/// through cos((delta_a-delta_b) omega) and is constant when the splittings
/// are equal.
double ih_fidelity_analytic(const IhState& p, double omega, const LocalHamiltonian& h);

/// (E, dE) of rho(x): E = delta_b + g (delta_a - delta_b),
/// dE = sqrt(g (delta_a^2 + delta_b^2) - g^2 (delta_a - delta_b)^2).
std::pair<double, double> mems_energy_analytic(double x, const LocalHamiltonian& h);

/// Energy moments of an ordered-spectrum state. The trace route is the
/// ground truth. The closed-form coefficient route
///   E = (1/2)(p1 D- + (p3 + 2 p4) D+)
/// disagrees with the trace by exactly p1 * delta_b; both values and the
/// difference are returned so the discrepancy stays visible.
struct IhEnergyAudit {
  double e_trace = 0.0;
  double de_trace = 0.0;
  double e_closed_form = 0.0;
  double de_closed_form = 0.0;
  double e_difference = 0.0;   // e_trace - e_closed_form, expected p1 * delta_b
  double de_difference = 0.0;  // de_trace - de_closed_form
};

IhEnergyAudit ih_energy_analytic(const IhState& p, const LocalHamiltonian& h);

enum class StateFamily { Mems, Ih };

/// Location of the first fidelity minimum: pi / (delta_a + delta_b) for the
/// maximally entangled mixed family, pi / |delta_a - delta_b| for the
/// ordered-spectrum family (StationaryError when the splittings are equal).
double family_omega_min(StateFamily kind, const LocalHamiltonian& h);

/// tau / T_bound for rho(x): omega_min * dE / arccos(sqrt(F_min)), valid
/// because the spread branch carries the bound for these states (E >= dE
/// is asserted; if it ever failed the generic max-branch would be used and
/// a note emitted on stderr).
double mems_speed_ratio(double x, const LocalHamiltonian& h, const AlphaTable& table);

}  // namespace qsl2q

#endif  // QSL2Q_FAMILIES_HPP
