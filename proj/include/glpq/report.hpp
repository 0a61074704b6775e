#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace glpq {

/// Experiment output: a one-line JSON header (sorted keys) followed by CSV
/// rows.  Rendering is byte-stable: parse(render(r)) renders identically,
/// across platforms, runs, and thread counts.
struct ExperimentReport {
  nlohmann::json parameters = nlohmann::json::object();
  double slope = 0.0;
  double slope_stderr = 0.0;
  std::string verdict;
  std::vector<std::pair<double, double>> rows;  // (t, value)
};

/// Shortest fixed formatting used in CSV cells: printf "%.12g".
std::string format_g12(double v);

/// Render to the on-disk format:
///   # {"parameters":{...},"slope":...,"stderr":...,"verdict":"..."}
///   t,value
///   <t>,<value>
/// Non-finite numbers anywhere raise ValidationError.
std::string render_report(const ExperimentReport& r);

void write_report(const ExperimentReport& r, const std::string& path);

ExperimentReport parse_report(const std::string& text);

struct FitResult {
  double slope = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares on (log t, log value).  Needs at least 3 rows and
/// strictly positive data.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& rows);

} // namespace glpq
