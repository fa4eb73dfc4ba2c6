#ifndef QSL2Q_REPORT_HPP
#define QSL2Q_REPORT_HPP

#include <string>
#include <vector>

#include "qsl2q/audit.hpp"
#include "qsl2q/experiments.hpp"
#include "qsl2q/qsl.hpp"

namespace qsl2q {

/// %.17g rendering, enough digits to round-trip a double.
std::string format_double(double value);

// CSV serializations of the pipeline results. Header row first; RFC-4180
// commas, '.' decimal separator, '\n' line ends. Byte-stable for a fixed
// seed and sample count regardless of the worker count.
std::string csv_fig1a(const Fig1aResult& result);
std::string csv_fig1b(const Fig1bResult& result);
std::string csv_fig2(const std::vector<Fig2Row>& rows);
std::string csv_fig3(const std::vector<Fig3Row>& rows);
std::string csv_fig4(const Fig4Result& result);
std::string csv_fig5(const Fig5Result& result);
std::string csv_alpha_table(const AlphaTable& table);

std::string render_check_table(const std::vector<CheckResult>& results);

}  // namespace qsl2q

#endif  // QSL2Q_REPORT_HPP
