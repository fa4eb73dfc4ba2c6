#include "qsl2q/report.hpp"

#include <cstdio>
#include <sstream>

namespace qsl2q {

namespace {

const char* branch_name(Branch b) { return b == Branch::Energy ? "energy" : "spread"; }

const char* kind_name(QslRecord::FidelityKind k) {
  return k == QslRecord::FidelityKind::FirstMinimum ? "first_minimum" : "fixed_checkpoint";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string csv_fig1a(const Fig1aResult& result) {
  std::string out = "c_bin_lo,c_bin_hi,count,ratio_min,ratio_max\n";
  for (const Fig1aBin& bin : result.bins) {
    if (bin.count == 0) continue;
    out += format_double(bin.c_lo) + "," + format_double(bin.c_hi) + "," +
           std::to_string(bin.count) + "," + format_double(bin.ratio_min) + "," +
           format_double(bin.ratio_max) + "\n";
  }
  return out;
}

std::string csv_fig1b(const Fig1bResult& result) {
  std::string out = "branch,concurrence,f_min,tau,t_bound,ratio\n";
  for (const QslRecord& rec : result.records) {
    out += std::string(branch_name(rec.branch)) + "," + format_double(rec.concurrence) + "," +
           format_double(rec.fidelity) + "," + format_double(rec.tau) + "," +
           format_double(rec.t_bound) + "," + format_double(rec.ratio) + "\n";
  }
  return out;
}

std::string csv_fig2(const std::vector<Fig2Row>& rows) {
  std::string out = "f_min,concurrence\n";
  for (const Fig2Row& r : rows)
    out += format_double(r.f_min) + "," + format_double(r.concurrence) + "\n";
  return out;
}

std::string csv_fig3(const std::vector<Fig3Row>& rows) {
  std::string out = "f_min,ratio_p1,ratio_p2\n";
  for (const Fig3Row& r : rows)
    out += format_double(r.f_min) + "," + format_double(r.ratio_p1) + "," +
           format_double(r.ratio_p2) + "\n";
  return out;
}

std::string csv_fig4(const Fig4Result& result) {
  std::string out = "slice,f_kind,c_bin_lo,c_bin_hi,count,mean_ratio,std_ratio\n";
  for (const Fig4SliceBin& bin : result.bins) {
    out += bin.slice + "," + kind_name(bin.kind) + "," + format_double(bin.c_lo) + "," +
           format_double(bin.c_hi) + "," + std::to_string(bin.count) + "," +
           format_double(bin.mean_ratio) + "," + format_double(bin.std_ratio) + "\n";
  }
  return out;
}

std::string csv_fig5(const Fig5Result& result) {
  std::string out = "series,x,c_bin_lo,c_bin_hi,count,f_min,ratio,std_ratio,mems_ratio_at_center\n";
  for (const Fig5MemsRow& r : result.mems_curve) {
    out += "mems," + format_double(r.x) + ",,,," + format_double(r.f_min) + "," +
           format_double(r.ratio) + ",,\n";
  }
  for (const Fig5IhBin& bin : result.ih_bins) {
    out += "ih,," + format_double(bin.c_lo) + "," + format_double(bin.c_hi) + "," +
           std::to_string(bin.count) + ",," + format_double(bin.mean_ratio) + "," +
           format_double(bin.std_ratio) + "," + format_double(bin.mems_ratio_at_center) + "\n";
  }
  return out;
}

std::string csv_alpha_table(const AlphaTable& table) {
  std::string out = "f,alpha,beta\n";
  const auto& grid = table.f_grid();
  const auto& alpha = table.alpha_values();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_double(grid[i]) + "," + format_double(alpha[i]) + "," +
           format_double(beta_bound(grid[i])) + "\n";
  }
  return out;
}

std::string render_check_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    const char* status = r.finding ? "NOTED" : (r.pass ? "PASS " : "FAIL ");
    out << "[" << status << "] " << r.name << ": value=" << format_double(r.value);
    if (!r.finding) out << " threshold=" << format_double(r.threshold);
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace qsl2q
