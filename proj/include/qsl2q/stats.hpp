#ifndef QSL2Q_STATS_HPP
#define QSL2Q_STATS_HPP

#include <functional>
#include <vector>

namespace qsl2q {

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic one-sample KS critical value at significance level alpha.
double ks_critical(std::size_t n, double alpha);

/// Asymptotic two-sample KS critical value.
double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha);

/// Pearson chi^2 against expected bin probabilities (counts vs n * p_i).
double chi2_statistic(const std::vector<long>& counts, const std::vector<double>& probabilities);

/// Spearman rank correlation; ties get average ranks.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct MeanStd {
  long count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
};

MeanStd mean_std(const std::vector<double>& values);

}  // namespace qsl2q

#endif  // QSL2Q_STATS_HPP
