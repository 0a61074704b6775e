#include <doctest.h>

#include "glpq/errors.hpp"
#include "glpq/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

using namespace glpq;

namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.parameters["experiment"] = "demo";
  r.parameters["points"] = 3;
  r.parameters["window"] = 0.125;
  r.slope = -1.5;
  r.slope_stderr = 0.01;
  r.verdict = "matches-dimension";
  r.rows = {{1e-3, 2.5}, {3.16e-3, 0.79}, {1e-2, 0.25}};
  return r;
}

} // namespace

TEST_CASE("fixed formatting") {
  CHECK(format_g12(1.0) == "1");
  CHECK(format_g12(0.5) == "0.5");
  CHECK(format_g12(0.001) == "0.001");
  CHECK(format_g12(-2.0) == "-2");
  CHECK(format_g12(1234567890123456.0) == "1.23456789012e+15");
  CHECK(format_g12(4.380518671308794) == "4.38051867131");
}

TEST_CASE("rendering is byte-stable through a parse round trip") {
  const ExperimentReport r = sample_report();
  const std::string text = render_report(r);

  SUBCASE("shape") {
    CHECK(text.rfind("# {", 0) == 0);
    CHECK(text.find("\nt,value\n") != std::string::npos);
    CHECK(text.find("\"verdict\":\"matches-dimension\"") != std::string::npos);
  }
  SUBCASE("round trip") {
    const ExperimentReport back = parse_report(text);
    CHECK(back.slope == r.slope);
    CHECK(back.slope_stderr == r.slope_stderr);
    CHECK(back.verdict == r.verdict);
    CHECK(back.parameters == r.parameters);
    REQUIRE(back.rows.size() == r.rows.size());
    CHECK(render_report(back) == text);
  }
}

TEST_CASE("non-finite content is rejected at rendering time") {
  ExperimentReport r = sample_report();
  r.slope = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(render_report(r), ValidationError);
  r = sample_report();
  r.rows[1].second = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(render_report(r), ValidationError);
}

TEST_CASE("parser rejects malformed documents") {
  const std::string good = render_report(sample_report());
  CHECK_THROWS_AS(parse_report(""), ValidationError);
  CHECK_THROWS_AS(parse_report("no header\nt,value\n"), ValidationError);
  CHECK_THROWS_AS(parse_report("# {not json\nt,value\n"), ValidationError);
  CHECK_THROWS_AS(parse_report("# {\"slope\":1}\nt,value\n"), ValidationError);
  {
    std::string s = good;
    const auto pos = s.find("t,value");
    s.replace(pos, 7, "x,y no!");
    CHECK_THROWS_AS(parse_report(s), ValidationError);
  }
  CHECK_THROWS_AS(parse_report(good + "0.5;0.5\n"), ValidationError);
  CHECK_THROWS_AS(parse_report(good + "0.5,abc\n"), ValidationError);
  CHECK_THROWS_AS(parse_report(good + "xyz,0.5\n"), ValidationError);
}

TEST_CASE("file output") {
  const std::string path = "test_report_tmp.csv";
  const ExperimentReport r = sample_report();
  write_report(r, path);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render_report(r));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_report(r, "no-such-dir/x/y.csv"), IoError);
}

TEST_CASE("log-log fit recovers exact power laws") {
  SUBCASE("slope and negligible residual") {
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < 7; ++i) {
      const double t = std::pow(10.0, -3.0 + 0.3 * i);
      rows.push_back({t, 3.7 * std::pow(t, -2.25)});
    }
    const FitResult fit = fit_loglog(rows);
    CHECK(fit.slope == doctest::Approx(-2.25).epsilon(1e-12));
    CHECK(fit.slope_stderr < 1e-10);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}, {2.0, 2.0}}), ValidationError);
    CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}, {2.0, -2.0}, {3.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(fit_loglog({{0.0, 1.0}, {2.0, 2.0}, {3.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}, {1.0, 2.0}, {1.0, 1.0}}), ValidationError);
  }
}
