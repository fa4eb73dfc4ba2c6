#include <doctest.h>

#include <cmath>

#include "qsl2q/experiments.hpp"
#include "qsl2q/report.hpp"
#include "qsl2q/sampling.hpp"

using namespace qsl2q;

namespace {
const AlphaTable& shared_table() {
  static const AlphaTable table;
  return table;
}
}  // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("orthogonal-family sweep structure") {
  Fig1aParams params;
  params.n_omega = 81;
  params.n_delta = 9;
  params.n_phase = 9;
  const Fig1aResult result = run_fig1a(params, shared_table());

  CHECK(result.n_points == 81L * 9L * 9L);
  CHECK(result.ratio_max == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(result.ratio_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(result.min_c_at_bound > 1.0 - 1e-3);
  CHECK(result.separable_ratio_min == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(result.separable_ratio_max == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  long counted = 0;
  for (const auto& bin : result.bins) {
    if (bin.count == 0) continue;
    counted += bin.count;
    CHECK(bin.ratio_max <= std::sqrt(2.0) + 1e-9);
    CHECK(bin.ratio_min >= 1.0 - 1e-9);
  }
  CHECK(counted == result.n_points);
}

TEST_CASE("pure-state window sweep") {
  Fig1bParams params;
  params.seed = 77;
  params.n_samples = 60000;
  params.workers = 2;
  const Fig1bResult result = run_fig1b(params, shared_table());

  CHECK(result.records.size() >= 1000);
  // the reported excess is an honest measurement: states with anti-aligned
  // product phases sit well above the fast-state concurrence bound
  double recomputed_excess = -1e300;
  for (const QslRecord& rec : result.records)
    recomputed_excess =
        std::max(recomputed_excess, rec.concurrence - std::sqrt(1.0 - rec.fidelity));
  CHECK(result.max_forbidden_excess == doctest::Approx(recomputed_excess).epsilon(1e-12));
  for (const QslRecord& rec : result.records) {
    CHECK(rec.fidelity >= params.f_min_lo);
    CHECK(rec.fidelity <= params.f_min_hi);
    CHECK(rec.ratio >= 1.0 - 1e-9);
    CHECK(rec.ratio == doctest::Approx(rec.tau / rec.t_bound).epsilon(1e-12));
  }
  // both branch families show up and respect the closed-form floors
  CHECK(result.min_ratio_energy_branch >= 1.0);
  CHECK(result.min_ratio_spread_branch >= 1.0);
  CHECK(result.min_ratio_energy_branch < result.min_ratio_spread_branch);

  Fig1bParams tiny = params;
  tiny.n_samples = 100;
  CHECK_THROWS_AS(run_fig1b(tiny, shared_table()), InsufficientSamplesError);
}

TEST_CASE("fig1b is deterministic across worker counts") {
  Fig1bParams params;
  params.seed = 31;
  params.n_samples = 60000;
  params.workers = 1;
  const Fig1bResult serial = run_fig1b(params, shared_table());
  params.workers = 3;
  const Fig1bResult threaded = run_fig1b(params, shared_table());
  CHECK(csv_fig1b(serial) == csv_fig1b(threaded));
}

TEST_CASE("curve pipelines") {
  const auto fig2 = run_fig2(1001);
  CHECK(fig2.size() == 1001);
  CHECK(fig2.front().concurrence == doctest::Approx(1.0));
  CHECK(fig2.back().concurrence == doctest::Approx(0.0));
  CHECK(fig2[350].f_min == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(fig2[350].concurrence == doctest::Approx(0.806).epsilon(1e-3));

  const auto fig3 = run_fig3(shared_table(), 1001);
  CHECK(fig3.size() == 1001);
  CHECK(fig3.front().ratio_p1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fig3.front().ratio_p2 == doctest::Approx(1.0).epsilon(1e-9));
  // the curves separate monotonically as the window deepens
  for (std::size_t i = 1; i < fig3.size(); ++i) {
    CHECK(fig3[i].ratio_p2 - fig3[i].ratio_p1 >=
          fig3[i - 1].ratio_p2 - fig3[i - 1].ratio_p1 - 1e-9);
  }
}

TEST_CASE("mixed-state trace extraction") {
  const LocalHamiltonian h = LocalHamiltonian::preset_h1();
  const ScanOptions scan;
  RandomStream rng(800, 4);
  const DensityMatrix2Q rho = sample_mixed_state(rng);
  const MixedStateTrace trace = trace_mixed_state(rho, h, 0.05, scan);

  REQUIRE(trace.first_min.has_value());
  const MixedFidelityEvaluator f(rho, h);
  double prev_tau = 0.0;
  double prev_level = 1.0;
  for (const auto& [level, tau] : trace.checkpoints) {
    CHECK(level < prev_level);     // levels walk down in 0.05 steps
    CHECK(tau > prev_tau);         // crossing times walk up
    CHECK(level > trace.first_min->f_min);
    CHECK(f(tau) == doctest::Approx(level).epsilon(1e-8));
    prev_tau = tau;
    prev_level = level;
  }
  CHECK(trace.first_min->omega > prev_tau);

  // stationary input produces no records
  const double d[4] = {0.4, 0.3, 0.2, 0.1};
  DensityMatrix2Q diag;
  diag.rho = ComplexMatrix::diagonal(std::span<const double>(d, 4));
  CHECK_FALSE(trace_mixed_state(diag, h, 0.05, scan).first_min.has_value());
}

TEST_CASE("mixed-state sweep aggregates") {
  Fig4Params params;
  params.seed = 11;
  params.n_samples = 3000;
  params.min_count = 20;
  params.workers = 2;
  const Fig4Result result = run_fig4(params, shared_table());

  CHECK(result.n_states == 3000);
  CHECK(result.n_records > 3000);
  CHECK(result.min_record_ratio >= 1.0 - 1e-9);
  CHECK_FALSE(result.bins.empty());
  for (const auto& bin : result.bins) {
    CHECK(bin.count >= params.min_count);
    CHECK(bin.mean_ratio >= 1.0 - 1e-9);
    CHECK(bin.c_hi > bin.c_lo);
  }
}

TEST_CASE("fig4 is deterministic across worker counts") {
  Fig4Params params;
  params.seed = 19;
  params.n_samples = 600;
  params.min_count = 5;
  params.workers = 1;
  const std::string serial = csv_fig4(run_fig4(params, shared_table()));
  params.workers = 3;
  const std::string threaded = csv_fig4(run_fig4(params, shared_table()));
  CHECK(serial == threaded);
  CHECK(serial.substr(0, serial.find('\n')) ==
        "slice,f_kind,c_bin_lo,c_bin_hi,count,mean_ratio,std_ratio");
}

TEST_CASE("family-comparison sweep") {
  Fig5Params params;
  params.seed = 23;
  params.n_ih_samples = 20000;
  params.min_count = 25;
  params.workers = 2;
  const Fig5Result result = run_fig5(params, shared_table());

  CHECK(result.n_raw == 20000);
  CHECK(result.n_filtered > 0);
  CHECK(result.n_filtered <= result.n_raw);
  CHECK(result.min_record_ratio >= 1.0 - 1e-9);
  REQUIRE_FALSE(result.mems_curve.empty());
  REQUIRE_FALSE(result.ih_bins.empty());

  // the averaged ordered-spectrum ratios dominate the maximally-entangled
  // curve in every populated bin
  for (const auto& bin : result.ih_bins) {
    CHECK(bin.count >= params.min_count);
    CHECK(bin.mean_ratio >= bin.mems_ratio_at_center);
  }
  // monotone saturation on the high-entanglement branch
  double prev = 1e300;
  for (const auto& row : result.mems_curve) {
    if (row.x < 2.0 / 3.0) continue;
    CHECK(row.ratio <= prev + 1e-12);
    prev = row.ratio;
  }
}

TEST_CASE("csv rendering is stable") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");

  const auto rows = run_fig2(11);
  const std::string csv = csv_fig2(rows);
  CHECK(csv.substr(0, csv.find('\n')) == "f_min,concurrence");
  CHECK(csv == csv_fig2(rows));
}

TEST_SUITE_END();
