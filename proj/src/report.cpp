#include "glpq/report.hpp"

#include "glpq/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace glpq {

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ValidationError(std::string("report: non-finite ") + what);
}

} // namespace

std::string render_report(const ExperimentReport& r) {
  require_finite(r.slope, "slope");
  require_finite(r.slope_stderr, "stderr");
  if (!r.parameters.is_object()) throw ValidationError("report: parameters must be a JSON object");
  nlohmann::json head;
  head["parameters"] = r.parameters;
  head["slope"] = r.slope;
  head["stderr"] = r.slope_stderr;
  head["verdict"] = r.verdict;
  std::string out = "# " + head.dump() + "\n";
  out += "t,value\n";
  for (const auto& [t, v] : r.rows) {
    require_finite(t, "row abscissa");
    require_finite(v, "row value");
    out += format_g12(t);
    out += ',';
    out += format_g12(v);
    out += '\n';
  }
  return out;
}

void write_report(const ExperimentReport& r, const std::string& path) {
  const std::string text = render_report(r);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

ExperimentReport parse_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ValidationError("report: missing '# ' header line");
  nlohmann::json head;
  try {
    head = nlohmann::json::parse(line.substr(2));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report: bad header JSON: ") + e.what());
  }
  if (!head.is_object() || !head.contains("parameters") || !head.contains("slope") ||
      !head.contains("stderr") || !head.contains("verdict"))
    throw ValidationError("report: header must carry parameters/slope/stderr/verdict");
  ExperimentReport r;
  r.parameters = head["parameters"];
  r.slope = head["slope"].get<double>();
  r.slope_stderr = head["stderr"].get<double>();
  r.verdict = head["verdict"].get<std::string>();
  if (!std::getline(in, line) || line != "t,value")
    throw ValidationError("report: missing 't,value' column line");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw ValidationError("report: row without a comma: " + line);
    char* end = nullptr;
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    const double t = std::strtod(a.c_str(), &end);
    if (end == a.c_str() || *end != '\0') throw ValidationError("report: bad abscissa: " + a);
    const double v = std::strtod(b.c_str(), &end);
    if (end == b.c_str() || *end != '\0') throw ValidationError("report: bad value: " + b);
    r.rows.emplace_back(t, v);
  }
  return r;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& rows) {
  const std::size_t n = rows.size();
  if (n < 3) throw ValidationError("fit_loglog: need at least 3 points");
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rows[i].first > 0.0) || !(rows[i].second > 0.0))
      throw ValidationError("fit_loglog: data must be strictly positive");
    xs[i] = std::log(rows[i].first);
    ys[i] = std::log(rows[i].second);
  }
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (!(sxx > 0.0)) throw ValidationError("fit_loglog: abscissae must not coincide");
  FitResult f;
  f.slope = sxy / sxx;
  const double intercept = ybar - f.slope * xbar;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rres = ys[i] - (intercept + f.slope * xs[i]);
    ss_res += rres * rres;
  }
  f.slope_stderr = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
  return f;
}

} // namespace glpq
