#ifndef QSL2Q_EXPERIMENTS_HPP
#define QSL2Q_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsl2q/dynamics.hpp"
#include "qsl2q/minima.hpp"
#include "qsl2q/qsl.hpp"

namespace qsl2q {

/// One Monte Carlo sample's contribution to a sweep.
struct QslRecord {
  double concurrence = 0.0;
  double fidelity = 1.0;
  enum class FidelityKind { FirstMinimum, FixedCheckpoint } fidelity_kind = FidelityKind::FirstMinimum;
  double tau = 0.0;      // time at which `fidelity` was reached, in hbar/energy units
  double t_bound = 0.0;  // QSL lower bound for that fidelity
  double ratio = 0.0;    // tau / t_bound
  Branch branch = Branch::Spread;
};

// ---------------------------------------------------------------------------
// Orthogonal-evolution sweep (equal splittings, states that reach an exactly
// orthogonal partner). The base parametrization fixes only the amplitude
// moduli; sweeping the relative phase of the middle amplitudes spans the
// whole concurrence range compatible with each orthogonality time.

struct Fig1aParams {
  int n_omega = 161;
  int n_delta = 25;
  int n_phase = 25;
  double c_bin_width = 0.05;
};

struct Fig1aBin {
  double c_lo = 0.0, c_hi = 0.0;
  long count = 0;
  double ratio_min = 0.0, ratio_max = 0.0;
};

struct Fig1aResult {
  std::vector<Fig1aBin> bins;
  long n_points = 0;
  double ratio_max = 0.0;
  double ratio_min = 0.0;
  // smallest concurrence among points whose ratio touches 1 (within 1e-6)
  double min_c_at_bound = 1.0;
  // ratio spread over exactly separable points (C < 1e-9)
  double separable_ratio_min = 0.0, separable_ratio_max = 0.0;
};

Fig1aResult run_fig1a(const Fig1aParams& params, const AlphaTable& table);

// ---------------------------------------------------------------------------
// Random pure states filtered to a first-minimum window, split by bound
// branch.

struct Fig1bParams {
  std::uint64_t seed = 1;
  std::uint64_t n_samples = 1000000;
  double f_min_lo = 0.35;
  double f_min_hi = 0.40;
  int workers = 0;
  bool progress = false;  // per-10^4-samples liveness lines on stderr
};

struct Fig1bResult {
  std::vector<QslRecord> records;  // accepted states only
  std::uint64_t n_raw = 0;
  double min_ratio_energy_branch = 0.0;
  double min_ratio_spread_branch = 0.0;
  // max over accepted records of C - sqrt(1 - F_min); positive would mean a
  // state inside the forbidden concurrence zone
  double max_forbidden_excess = 0.0;
};

/// Throws InsufficientSamplesError when fewer than 1000 states land in the
/// window.
Fig1bResult run_fig1b(const Fig1bParams& params, const AlphaTable& table);

// ---------------------------------------------------------------------------
// Dense curves for the fastest-state family.

struct Fig2Row {
  double f_min = 0.0;
  double concurrence = 0.0;
};

std::vector<Fig2Row> run_fig2(int n_points = 1001);

struct Fig3Row {
  double f_min = 0.0;
  double ratio_p1 = 0.0;
  double ratio_p2 = 0.0;
};

/// Grid spans [0, 0.999]; both ratios are 0/0 at F_min = 1.
std::vector<Fig3Row> run_fig3(const AlphaTable& table, int n_points = 1001);

// ---------------------------------------------------------------------------
// Mixed-state sweep with fixed-fidelity checkpoints and (F, C)-window
// averaging.

struct Fig4Params {
  std::uint64_t seed = 7;
  std::uint64_t n_samples = 200000;
  double c_bin_width = 0.05;
  double checkpoint_step = 0.05;              // F = 0.95, 0.90, ... down to F_min
  std::vector<double> fixed_slices = {0.95, 0.80};
  std::vector<double> fmin_slices = {0.925, 0.825};
  double fmin_window = 0.0125;
  long min_count = 50;
  LocalHamiltonian hamiltonian = LocalHamiltonian::preset_h1();
  ScanOptions scan;
  int workers = 0;
  bool progress = false;
};

/// Everything recorded for one sampled mixed state: invariants of the state
/// plus the checkpoint crossing times up to (and including) the first
/// fidelity minimum.
struct MixedStateTrace {
  double concurrence = 0.0;
  double mean_energy = 0.0;
  double energy_spread = 0.0;
  std::optional<FirstMinimum> first_min;
  std::vector<std::pair<double, double>> checkpoints;  // (F value, tau)
};

MixedStateTrace trace_mixed_state(const DensityMatrix2Q& rho, const LocalHamiltonian& h,
                                  double checkpoint_step, const ScanOptions& scan);

struct Fig4SliceBin {
  std::string slice;  // "F=0.95", "Fmin=0.925", ...
  QslRecord::FidelityKind kind = QslRecord::FidelityKind::FixedCheckpoint;
  double c_lo = 0.0, c_hi = 0.0;
  long count = 0;
  double mean_ratio = 0.0;
  double std_ratio = 0.0;
};

struct Fig4Result {
  std::vector<Fig4SliceBin> bins;  // only bins with count >= min_count
  std::uint64_t n_states = 0;
  std::uint64_t n_stationary = 0;  // states whose fidelity never drops
  std::uint64_t n_records = 0;
  double min_record_ratio = 0.0;
};

Fig4Result run_fig4(const Fig4Params& params, const AlphaTable& table);

// ---------------------------------------------------------------------------
// Maximally-entangled-mixed curve vs ordered-spectrum averages under the
// asymmetric Hamiltonian.

struct Fig5Params {
  std::uint64_t seed = 5;
  std::uint64_t n_ih_samples = 100000;
  double x_min = 0.02;
  int n_x = 99;
  double c_bin_width = 0.05;
  long min_count = 50;
  LocalHamiltonian hamiltonian = LocalHamiltonian::preset_h2();
  int workers = 0;
  bool progress = false;
};

struct Fig5MemsRow {
  double x = 0.0;
  double f_min = 0.0;
  double ratio = 0.0;
};

struct Fig5IhBin {
  double c_lo = 0.0, c_hi = 0.0;
  long count = 0;
  double mean_ratio = 0.0;
  double std_ratio = 0.0;
  double mems_ratio_at_center = 0.0;
};

struct Fig5Result {
  std::vector<Fig5MemsRow> mems_curve;
  std::vector<Fig5IhBin> ih_bins;  // only bins with count >= min_count
  std::uint64_t n_raw = 0;
  std::uint64_t n_filtered = 0;  // draws passing the F_min criterion
  double min_record_ratio = 0.0;
};

Fig5Result run_fig5(const Fig5Params& params, const AlphaTable& table);

}  // namespace qsl2q

#endif  // QSL2Q_EXPERIMENTS_HPP
