#include "qsl2q/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>

#include "qsl2q/families.hpp"
#include "qsl2q/parallel.hpp"
#include "qsl2q/sampling.hpp"
#include "qsl2q/stats.hpp"

namespace qsl2q {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bisection for the unique crossing of a strictly decreasing segment.
template <typename Fn>
double monotone_crossing(const Fn& f, double lo, double hi, double target, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

int bin_index(double value, double width, int n_bins) {
  const int i = static_cast<int>(std::floor(value / width));
  return std::clamp(i, 0, n_bins - 1);
}

struct RatioAccumulator {
  long count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double r) {
    ++count;
    sum += r;
    sum_sq += r * r;
  }
  double mean() const { return count > 0 ? sum / count : 0.0; }
  double std_dev() const {
    if (count < 2) return 0.0;
    const double m = mean();
    return std::sqrt(std::max(0.0, (sum_sq - count * m * m) / (count - 1)));
  }
};

std::string format_level(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

std::function<void(std::uint64_t)> progress_cb(bool enabled, const char* label,
                                               std::uint64_t chunk_size) {
  if (!enabled) return {};
  return [label, chunk_size](std::uint64_t chunks_done) {
    std::cerr << label << ": " << chunks_done * chunk_size << " samples\n";
  };
}

}  // namespace

// ---------------------------------------------------------------------------

Fig1aResult run_fig1a(const Fig1aParams& params, const AlphaTable& table) {
  const LocalHamiltonian h = LocalHamiltonian::preset_h1();
  if (params.n_omega < 2 || params.n_delta < 2 || params.n_phase < 2)
    throw OutOfDomainError("run_fig1a: each grid needs at least 2 points");
  const int n_bins = static_cast<int>(std::ceil(1.0 / params.c_bin_width));
  std::vector<Fig1aBin> bins(n_bins);
  for (int i = 0; i < n_bins; ++i) {
    bins[i].c_lo = i * params.c_bin_width;
    bins[i].c_hi = std::min(1.0, (i + 1) * params.c_bin_width);
    bins[i].ratio_min = kInf;
    bins[i].ratio_max = -kInf;
  }

  Fig1aResult out;
  out.ratio_max = -kInf;
  out.ratio_min = kInf;
  out.separable_ratio_min = kInf;
  out.separable_ratio_max = -kInf;

  for (int io = 0; io < params.n_omega; ++io) {
    const double omega =
        M_PI / 2.0 + (M_PI / 2.0) * static_cast<double>(io) / (params.n_omega - 1);
    for (int id = 0; id < params.n_delta; ++id) {
      const double delta = static_cast<double>(id) / (params.n_delta - 1);
      const PureState2Q base = orthogonal_family_state({omega, delta});
      const double e = mean_energy(base, h);
      const double de = energy_spread(base, h);
      const auto fmin = first_minimum(base, h);
      if (!fmin) continue;  // not reachable on this family, kept as a guard
      const QslBound bound = qsl_time(e, de, fmin->f_min, table);
      const double ratio = fmin->omega / bound.t_bound;

      for (int ip = 0; ip < params.n_phase; ++ip) {
        // relative phase on c1: moduli (hence fidelity, energies, tau) are
        // untouched, only the concurrence moves
        const double phase = M_PI * static_cast<double>(ip) / (params.n_phase - 1);
        PureState2Q psi = base;
        psi.c[1] *= std::polar(1.0, phase);
        const double c = concurrence_pure(psi);

        ++out.n_points;
        out.ratio_max = std::max(out.ratio_max, ratio);
        out.ratio_min = std::min(out.ratio_min, ratio);
        if (ratio <= 1.0 + 1e-6) out.min_c_at_bound = std::min(out.min_c_at_bound, c);
        if (c < 1e-9) {
          out.separable_ratio_min = std::min(out.separable_ratio_min, ratio);
          out.separable_ratio_max = std::max(out.separable_ratio_max, ratio);
        }
        Fig1aBin& bin = bins[bin_index(c, params.c_bin_width, n_bins)];
        ++bin.count;
        bin.ratio_min = std::min(bin.ratio_min, ratio);
        bin.ratio_max = std::max(bin.ratio_max, ratio);
      }
    }
  }
  out.bins = std::move(bins);
  return out;
}

// ---------------------------------------------------------------------------

Fig1bResult run_fig1b(const Fig1bParams& params, const AlphaTable& table) {
  const LocalHamiltonian h = LocalHamiltonian::preset_h1();
  constexpr std::uint64_t kChunk = 10000;
  const std::uint64_t n_chunks = (params.n_samples + kChunk - 1) / kChunk;

  const std::function<std::vector<QslRecord>(std::uint64_t)> worker =
      [&](std::uint64_t chunk) {
        std::vector<QslRecord> accepted;
        const std::uint64_t lo = chunk * kChunk;
        const std::uint64_t hi = std::min(params.n_samples, lo + kChunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          RandomStream rng(params.seed, i);
          const PureState2Q psi = sample_pure_state(rng);
          const auto fmin = first_minimum(psi, h);
          if (!fmin || fmin->f_min < params.f_min_lo || fmin->f_min > params.f_min_hi)
            continue;
          QslRecord rec;
          rec.concurrence = concurrence_pure(psi);
          rec.fidelity = fmin->f_min;
          rec.fidelity_kind = QslRecord::FidelityKind::FirstMinimum;
          rec.tau = fmin->omega;
          const QslBound bound =
              qsl_time(mean_energy(psi, h), energy_spread(psi, h), fmin->f_min, table);
          rec.t_bound = bound.t_bound;
          rec.ratio = rec.tau / rec.t_bound;
          rec.branch = bound.branch;
          accepted.push_back(rec);
        }
        return accepted;
      };

  const auto chunks = parallel_map<std::vector<QslRecord>>(
      n_chunks, params.workers, worker, progress_cb(params.progress, "fig1b", kChunk), 1);

  Fig1bResult out;
  out.n_raw = params.n_samples;
  out.min_ratio_energy_branch = kInf;
  out.min_ratio_spread_branch = kInf;
  out.max_forbidden_excess = -kInf;
  for (const auto& chunk : chunks) {
    for (const QslRecord& rec : chunk) {
      out.records.push_back(rec);
      if (rec.branch == Branch::Energy)
        out.min_ratio_energy_branch = std::min(out.min_ratio_energy_branch, rec.ratio);
      else
        out.min_ratio_spread_branch = std::min(out.min_ratio_spread_branch, rec.ratio);
      out.max_forbidden_excess = std::max(
          out.max_forbidden_excess, rec.concurrence - std::sqrt(1.0 - rec.fidelity));
    }
  }
  if (out.records.size() < 1000)
    throw InsufficientSamplesError("run_fig1b: only " + std::to_string(out.records.size()) +
                                   " states in the F_min window");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Fig2Row> run_fig2(int n_points) {
  std::vector<Fig2Row> rows(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double f = static_cast<double>(i) / (n_points - 1);
    rows[i] = {f, std::sqrt(1.0 - f)};
  }
  return rows;
}

std::vector<Fig3Row> run_fig3(const AlphaTable& table, int n_points) {
  std::vector<Fig3Row> rows(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double f = 0.999 * static_cast<double>(i) / (n_points - 1);
    const auto [p1, p2] = fast_state_ratios(f, table);
    rows[i] = {f, p1, p2};
  }
  return rows;
}

// ---------------------------------------------------------------------------

MixedStateTrace trace_mixed_state(const DensityMatrix2Q& rho, const LocalHamiltonian& h,
                                  double checkpoint_step, const ScanOptions& scan) {
  MixedStateTrace trace;
  trace.concurrence = concurrence_mixed(rho);
  trace.mean_energy = mean_energy(rho, h);
  trace.energy_spread = energy_spread(rho, h);

  const MixedFidelityEvaluator f(rho, h);
  trace.first_min =
      first_minimum_of([&f](double omega) { return f(omega); }, scan_window(h), scan);
  if (!trace.first_min) return trace;

  // The fidelity is strictly decreasing from 1 on (0, omega_min), so every
  // intermediate level is crossed exactly once.
  const double omega_min = trace.first_min->omega;
  const double f_min = trace.first_min->f_min;
  for (int k = 1;; ++k) {
    const double level = 1.0 - k * checkpoint_step;
    if (level <= f_min || level <= 0.0) break;
    const double tau = monotone_crossing([&f](double omega) { return f(omega); }, 0.0,
                                         omega_min, level, scan.refine_tol);
    trace.checkpoints.emplace_back(level, tau);
  }
  return trace;
}

Fig4Result run_fig4(const Fig4Params& params, const AlphaTable& table) {
  constexpr std::uint64_t kChunk = 1000;
  const std::uint64_t n_chunks = (params.n_samples + kChunk - 1) / kChunk;

  struct StateRecords {
    bool stationary = false;
    std::vector<QslRecord> records;
  };

  const std::function<std::vector<StateRecords>(std::uint64_t)> worker =
      [&](std::uint64_t chunk) {
        std::vector<StateRecords> results;
        const std::uint64_t lo = chunk * kChunk;
        const std::uint64_t hi = std::min(params.n_samples, lo + kChunk);
        results.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
          RandomStream rng(params.seed, i);
          const DensityMatrix2Q rho = sample_mixed_state(rng);
          const MixedStateTrace trace =
              trace_mixed_state(rho, params.hamiltonian, params.checkpoint_step, params.scan);
          StateRecords sr;
          if (!trace.first_min) {
            sr.stationary = true;
            results.push_back(std::move(sr));
            continue;
          }
          auto make_record = [&](double fidelity, double tau,
                                 QslRecord::FidelityKind kind) {
            QslRecord rec;
            rec.concurrence = trace.concurrence;
            rec.fidelity = fidelity;
            rec.fidelity_kind = kind;
            rec.tau = tau;
            const QslBound bound =
                qsl_time(trace.mean_energy, trace.energy_spread, fidelity, table);
            rec.t_bound = bound.t_bound;
            rec.ratio = tau / bound.t_bound;
            rec.branch = bound.branch;
            return rec;
          };
          for (const auto& [level, tau] : trace.checkpoints)
            sr.records.push_back(
                make_record(level, tau, QslRecord::FidelityKind::FixedCheckpoint));
          sr.records.push_back(make_record(trace.first_min->f_min, trace.first_min->omega,
                                           QslRecord::FidelityKind::FirstMinimum));
          results.push_back(std::move(sr));
        }
        return results;
      };

  const auto chunks = parallel_map<std::vector<StateRecords>>(
      n_chunks, params.workers, worker, progress_cb(params.progress, "fig4", kChunk), 10);

  const int n_bins = static_cast<int>(std::ceil(1.0 / params.c_bin_width));
  struct SliceSpec {
    std::string name;
    QslRecord::FidelityKind kind;
    double level;
  };
  std::vector<SliceSpec> slices;
  for (double f : params.fixed_slices)
    slices.push_back({"F=" + format_level(f), QslRecord::FidelityKind::FixedCheckpoint, f});
  for (double f : params.fmin_slices)
    slices.push_back({"Fmin=" + format_level(f), QslRecord::FidelityKind::FirstMinimum, f});

  std::vector<std::vector<RatioAccumulator>> acc(slices.size(),
                                                 std::vector<RatioAccumulator>(n_bins));
  Fig4Result out;
  out.min_record_ratio = kInf;
  for (const auto& chunk : chunks) {
    for (const StateRecords& sr : chunk) {
      ++out.n_states;
      if (sr.stationary) {
        ++out.n_stationary;
        continue;
      }
      for (const QslRecord& rec : sr.records) {
        ++out.n_records;
        out.min_record_ratio = std::min(out.min_record_ratio, rec.ratio);
        const int bin = bin_index(rec.concurrence, params.c_bin_width, n_bins);
        for (std::size_t s = 0; s < slices.size(); ++s) {
          if (rec.fidelity_kind != slices[s].kind) continue;
          const bool in_slice =
              slices[s].kind == QslRecord::FidelityKind::FixedCheckpoint
                  ? std::abs(rec.fidelity - slices[s].level) < 1e-9
                  : std::abs(rec.fidelity - slices[s].level) <= params.fmin_window;
          if (in_slice) acc[s][bin].add(rec.ratio);
        }
      }
    }
  }

  for (std::size_t s = 0; s < slices.size(); ++s) {
    for (int b = 0; b < n_bins; ++b) {
      if (acc[s][b].count < params.min_count) continue;
      Fig4SliceBin bin;
      bin.slice = slices[s].name;
      bin.kind = slices[s].kind;
      bin.c_lo = b * params.c_bin_width;
      bin.c_hi = std::min(1.0, (b + 1) * params.c_bin_width);
      bin.count = acc[s][b].count;
      bin.mean_ratio = acc[s][b].mean();
      bin.std_ratio = acc[s][b].std_dev();
      out.bins.push_back(std::move(bin));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Fig5Result run_fig5(const Fig5Params& params, const AlphaTable& table) {
  const LocalHamiltonian& h = params.hamiltonian;
  const double omega_min_ih = family_omega_min(StateFamily::Ih, h);
  const double omega_min_mems = family_omega_min(StateFamily::Mems, h);

  Fig5Result out;
  out.min_record_ratio = kInf;

  out.mems_curve.reserve(params.n_x);
  for (int i = 0; i < params.n_x; ++i) {
    const double x =
        params.x_min + (1.0 - params.x_min) * static_cast<double>(i) / (params.n_x - 1);
    Fig5MemsRow row;
    row.x = x;
    row.f_min = mems_fidelity_analytic(x, omega_min_mems, h);
    row.ratio = mems_speed_ratio(x, h, table);
    out.min_record_ratio = std::min(out.min_record_ratio, row.ratio);
    out.mems_curve.push_back(row);
  }

  const int n_bins = static_cast<int>(std::ceil(1.0 / params.c_bin_width));

  struct IhDraw {
    bool kept = false;
    int bin = 0;
    double ratio = 0.0;
  };
  constexpr std::uint64_t kChunk = 10000;
  const std::uint64_t n_chunks = (params.n_ih_samples + kChunk - 1) / kChunk;
  const std::function<std::vector<IhDraw>(std::uint64_t)> worker = [&](std::uint64_t chunk) {
    std::vector<IhDraw> draws;
    const std::uint64_t lo = chunk * kChunk;
    const std::uint64_t hi = std::min(params.n_ih_samples, lo + kChunk);
    draws.reserve(hi - lo);
    for (std::uint64_t i = lo; i < hi; ++i) {
      RandomStream rng(params.seed, i);
      const IhState state = sample_ih(rng);
      IhDraw draw;
      const double f_min = ih_fidelity_analytic(state, omega_min_ih, h);
      const DensityMatrix2Q rho = state.matrix();
      const double c = concurrence_mixed(rho);
      draw.bin = bin_index(c, params.c_bin_width, n_bins);
      // keep only draws whose first minimum is shallower than the one of
      // the equally-entangled maximally-entangled-mixed state
      const double k_center = (draw.bin + 0.5) * params.c_bin_width;
      const double f_min_mems = mems_fidelity_analytic(k_center, omega_min_mems, h);
      if (f_min > f_min_mems) {
        draw.kept = true;
        const QslBound bound =
            qsl_time(mean_energy(rho, h), energy_spread(rho, h), f_min, table);
        draw.ratio = omega_min_ih / bound.t_bound;
      }
      draws.push_back(draw);
    }
    return draws;
  };

  const auto chunks = parallel_map<std::vector<IhDraw>>(
      n_chunks, params.workers, worker, progress_cb(params.progress, "fig5", kChunk), 1);

  std::vector<RatioAccumulator> acc(n_bins);
  for (const auto& chunk : chunks) {
    for (const IhDraw& draw : chunk) {
      ++out.n_raw;
      if (!draw.kept) continue;
      ++out.n_filtered;
      acc[draw.bin].add(draw.ratio);
      out.min_record_ratio = std::min(out.min_record_ratio, draw.ratio);
    }
  }

  for (int b = 0; b < n_bins; ++b) {
    if (acc[b].count < params.min_count) continue;
    Fig5IhBin bin;
    bin.c_lo = b * params.c_bin_width;
    bin.c_hi = std::min(1.0, (b + 1) * params.c_bin_width);
    bin.count = acc[b].count;
    bin.mean_ratio = acc[b].mean();
    bin.std_ratio = acc[b].std_dev();
    const double center = 0.5 * (bin.c_lo + bin.c_hi);
    bin.mems_ratio_at_center = mems_speed_ratio(center, h, table);
    out.ih_bins.push_back(std::move(bin));
  }
  return out;
}

}  // namespace qsl2q
