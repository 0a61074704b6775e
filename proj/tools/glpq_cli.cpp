// Command-line front end: exact bracket flags, transform self-tests, and the
// norm/decay experiments.  All output is byte-stable for a fixed set of flags
// and seed, independent of thread count (cap threads with --threads or the
// GLPQ_THREADS environment variable).
//
// Exit codes: 0 success; 1 invalid input or a generating set that fails the
// bracket condition; 2 truncation/resource/file-system failures.

#include <CLI11.hpp>
#include <json.hpp>

#include "glpq/errors.hpp"
#include "glpq/fourier.hpp"
#include "glpq/liealg.hpp"
#include "glpq/normlab.hpp"
#include "glpq/repr.hpp"
#include "glpq/report.hpp"
#include "glpq/rng.hpp"
#include "glpq/speccalc.hpp"
#include "glpq/symcalc.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

void print_line(const json& j) {
  const std::string s = j.dump() + "\n";
  std::fputs(s.c_str(), stdout);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw glpq::IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (!f && !f.eof()) throw glpq::IoError("read failed: " + path);
  return ss.str();
}

double parse_exponent(const std::string& s, const char* name) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw glpq::ValidationError(std::string("bad value for ") + name + ": " + s);
  return v;
}

std::vector<int> parse_int_list(const std::string& s, const char* name) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || end == tok.c_str() || *end != '\0')
      throw glpq::ValidationError(std::string("bad integer list for ") + name + ": " + s);
    out.push_back(static_cast<int>(v));
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) throw glpq::ValidationError(std::string(name) + ": empty list");
  return out;
}

std::vector<int> parse_op(const std::string& spec) {
  if (spec == "laplacian") return {1, 2, 3};
  const std::string prefix = "sublaplacian:";
  if (spec.rfind(prefix, 0) == 0) return parse_int_list(spec.substr(prefix.size()), "--op");
  throw glpq::ValidationError("--op must be laplacian or sublaplacian:<i,j,...> (got '" + spec +
                              "')");
}

glpq::MultiplierSymbol parse_symbol(const std::string& spec, const glpq::InvariantOperator& op,
                                    int two_band) {
  if (spec == "identity") return glpq::identity_symbol(two_band);
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const double v = parse_exponent(spec.substr(colon + 1), "--symbol");
    if (kind == "heat") return glpq::heat_symbol(v, op, two_band);
    if (kind == "bessel") return glpq::bessel_symbol(v, op, two_band);
    if (kind == "riesz") return glpq::riesz_symbol(v, op, two_band);
  }
  throw glpq::ValidationError("--symbol must be identity, heat:<t>, bessel:<a>, or riesz:<a> "
                              "(got '" +
                              spec + "')");
}

json exponent_json(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

void emit_report(const glpq::ExperimentReport& rep, const std::string& out_path) {
  const std::string text = glpq::render_report(rep);
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) glpq::write_report(rep, out_path);
}

// ---------------------------------------------------------------------------

struct HausdorffArgs {
  std::string builtin = "su2";
  std::string file;
  std::string generators;
};

void run_hausdorff(const HausdorffArgs& a) {
  glpq::LieAlgebraSpec alg;
  if (!a.file.empty()) {
    alg = glpq::parse_algebra(read_file(a.file));
  } else if (a.builtin == "su2") {
    alg = glpq::builtin_su2();
  } else if (a.builtin == "su3") {
    alg = glpq::builtin_su3();
  } else {
    throw glpq::ValidationError("--builtin must be su2 or su3 (got '" + a.builtin + "')");
  }
  const std::vector<int> gens = parse_int_list(a.generators, "--generators");
  const glpq::HoermanderFlag flag = glpq::hoermander_flag(alg, gens);
  json j;
  j["Q"] = flag.hausdorff_Q;
  j["dims"] = flag.dims;
  j["generators"] = flag.generator_indices;
  j["kappa"] = flag.kappa;
  print_line(j);
}

struct SelfTestArgs {
  int band = 5;       // largest l for the orthogonality scan
  int seeds = 100;    // number of random band-limited functions
  std::uint64_t seed = 12345;
};

void run_selftest(const SelfTestArgs& a) {
  if (a.band < 1 || a.band > 6)
    throw glpq::ValidationError("fourier-selftest: --band must lie in [1, 6]");
  if (a.seeds < 1 || a.seeds > 10000)
    throw glpq::ValidationError("fourier-selftest: --seeds must lie in [1, 10000]");
  const int two_band = 2 * a.band;

  const double schur = glpq::schur_orthogonality_residual(two_band);

  const glpq::QuadratureGrid grid = glpq::build_grid(two_band);
  double roundtrip = 0.0, parseval = 0.0;
  for (int s = 0; s < a.seeds; ++s) {
    glpq::Rng rng(a.seed + static_cast<std::uint64_t>(s));
    glpq::FourierCoefficients f = glpq::zero_coefficients(two_band);
    for (int two_l = 0; two_l <= two_band; ++two_l)
      for (int r = 0; r < two_l + 1; ++r)
        for (int c = 0; c < two_l + 1; ++c) f.hat[two_l](r, c) = rng.complex_symmetric();
    const std::vector<glpq::c64> samples = glpq::inverse(grid, f);
    const glpq::FourierCoefficients back = glpq::forward(grid, samples, two_band);
    for (int two_l = 0; two_l <= two_band; ++two_l)
      roundtrip = std::max(roundtrip,
                           (back.hat[two_l] - f.hat[two_l]).cwiseAbs().maxCoeff());
    std::vector<glpq::c64> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) sq[i] = std::norm(samples[i]);
    const double l2sq = glpq::integrate(grid, sq).real();
    const double plan = glpq::plancherel_norm(f);
    parseval = std::max(parseval, std::abs(l2sq - plan * plan) / std::max(1.0, plan * plan));
  }

  double casimir_err = 0.0, sublap_err = 0.0;
  const glpq::InvariantOperator sub12 = glpq::sublaplacian_operator({1, 2});
  for (int two_l = 0; two_l <= 20; ++two_l) {
    const double l = 0.5 * two_l;
    const Eigen::MatrixXcd cas = glpq::casimir_matrix(two_l);
    const Eigen::MatrixXcd expect =
        l * (l + 1.0) * Eigen::MatrixXcd::Identity(two_l + 1, two_l + 1);
    casimir_err = std::max(casimir_err, (cas - expect).cwiseAbs().maxCoeff());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(glpq::operator_matrix(sub12, two_l));
    std::vector<double> predicted = glpq::operator_spectrum(sub12, two_l);
    std::sort(predicted.begin(), predicted.end());
    for (int k = 0; k <= two_l; ++k)
      sublap_err = std::max(sublap_err, std::abs(es.eigenvalues()(k) - predicted[k]));
  }

  const bool ok = schur < 1e-10 && roundtrip < 1e-10 && parseval < 1e-10 &&
                  casimir_err < 1e-10 && sublap_err < 1e-10;
  json j;
  j["band"] = a.band;
  j["casimir_max_err"] = casimir_err;
  j["parseval_max_rel_err"] = parseval;
  j["roundtrip_max_err"] = roundtrip;
  j["schur_residual"] = schur;
  j["seed"] = a.seed;
  j["seeds"] = a.seeds;
  j["status"] = ok ? "ok" : "fail";
  j["sublaplacian_max_err"] = sublap_err;
  print_line(j);
  if (!ok) throw glpq::ValidationError("fourier-selftest: residuals exceed 1e-10");
}

struct HeatDecayArgs {
  std::string op;
  double t_min = 1e-3, t_max = 1e-2;
  int points = 9;
  int lmax = 60;
  std::string out;
};

void run_heat_decay(const HeatDecayArgs& a) {
  glpq::HeatDecayParams par;
  par.fields = parse_op(a.op);
  par.t_min = a.t_min;
  par.t_max = a.t_max;
  par.points = a.points;
  par.floor_l = a.lmax;
  emit_report(glpq::heat_decay_experiment(par), a.out);
}

struct SharpnessArgs {
  double order = 1.0;
  std::string p = "1.3333333333333333";
  std::string q = "4";
  std::string op;
  double t_min = 0.03, t_max = 0.3;
  int points = 7;
  int band = 0;  // 0 = automatic per-time band
  std::string out;
};

void run_sharpness(const SharpnessArgs& a) {
  glpq::SharpnessParams par;
  par.order = a.order;
  par.p = parse_exponent(a.p, "--p");
  par.q = parse_exponent(a.q, "--q");
  par.fields = parse_op(a.op);
  par.t_min = a.t_min;
  par.t_max = a.t_max;
  par.points = a.points;
  if (a.band < 0) throw glpq::ValidationError("bessel-sharpness: --band must be >= 0");
  par.fixed_two_band = 2 * a.band;
  emit_report(glpq::bessel_sharpness_experiment(par), a.out);
}

struct ThresholdArgs {
  std::string p = "1.3333333333333333";
  std::string q = "4";
  std::string op;
  double t_min = 0.03, t_max = 0.3;
  int points = 7;
  std::string out;  // prefix for <prefix>_above.csv / <prefix>_below.csv
};

void run_threshold(const ThresholdArgs& a) {
  glpq::ThresholdParams par;
  par.p = parse_exponent(a.p, "--p");
  par.q = parse_exponent(a.q, "--q");
  par.fields = parse_op(a.op);
  par.t_min = a.t_min;
  par.t_max = a.t_max;
  par.points = a.points;
  const glpq::ThresholdResult res = glpq::threshold_experiment(par);
  json j;
  j["critical_order"] = res.critical;
  j["flipped"] = res.flipped;
  j["verdict_above"] = res.above.verdict;
  j["verdict_below"] = res.below.verdict;
  print_line(j);
  std::fputs(glpq::render_report(res.above).c_str(), stdout);
  std::fputs(glpq::render_report(res.below).c_str(), stdout);
  if (!a.out.empty()) {
    glpq::write_report(res.above, a.out + "_above.csv");
    glpq::write_report(res.below, a.out + "_below.csv");
  }
}

struct SeminormArgs {
  std::string symbol;
  std::string op;
  int band = 4;
  std::string alpha = "0,0,0,0";
  double m = 0.0, rho = 1.0, delta = 0.0, kappa = 1.0;
  std::string side = "left";
};

void run_seminorm(const SeminormArgs& a) {
  if (a.band < 1 || a.band > 32) throw glpq::ValidationError("seminorm: --band must lie in [1, 32]");
  const std::vector<int> fields = parse_op(a.op);
  const glpq::InvariantOperator op = glpq::sublaplacian_operator(fields);
  const int two_band = 2 * a.band;
  const glpq::MultiplierSymbol sigma = parse_symbol(a.symbol, op, two_band);
  const std::vector<int> al = parse_int_list(a.alpha, "--alpha");
  if (al.size() != 4)
    throw glpq::ValidationError(
        "--alpha needs 4 comma-separated exponents for the entries 11,12,21,22");
  const std::array<int, 4> alpha{al[0], al[1], al[2], al[3]};
  glpq::WeightSide side;
  if (a.side == "left") {
    side = glpq::WeightSide::Left;
  } else if (a.side == "right") {
    side = glpq::WeightSide::Right;
  } else {
    throw glpq::ValidationError("--side must be left or right");
  }
  const double value =
      glpq::seminorm(sigma, alpha, a.m, a.rho, a.delta, op, side, a.kappa);
  json j;
  j["alpha"] = al;
  j["band"] = a.band;
  j["delta"] = a.delta;
  j["kappa"] = a.kappa;
  j["m"] = a.m;
  j["op"] = a.op;
  j["rho"] = a.rho;
  j["seminorm"] = value;
  j["side"] = a.side;
  j["symbol"] = a.symbol;
  print_line(j);
}

struct OpNormArgs {
  std::string symbol;
  std::string op;
  int band = 6;
  std::string p = "2";
  std::string q = "2";
  std::uint64_t seed = 12345;
  int iters = 12;
};

void run_opnorm(const OpNormArgs& a) {
  if (a.band < 0 || a.band > 64) throw glpq::ValidationError("opnorm: --band must lie in [0, 64]");
  const std::vector<int> fields = parse_op(a.op);
  const glpq::InvariantOperator op = glpq::sublaplacian_operator(fields);
  const glpq::MultiplierSymbol sigma = parse_symbol(a.symbol, op, 2 * a.band);
  const double p = parse_exponent(a.p, "--p");
  const double q = parse_exponent(a.q, "--q");
  const glpq::OpNormEstimate est = glpq::opnorm_lower_bound(sigma, p, q, a.seed, a.iters);
  json j;
  j["band"] = a.band;
  j["iters"] = a.iters;
  j["lower_bound"] = est.lower_bound;
  j["op"] = a.op;
  j["p"] = exponent_json(p);
  j["q"] = exponent_json(q);
  j["seed"] = a.seed;
  j["symbol"] = a.symbol;
  j["witness"] = est.witness;
  print_line(j);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-symbol calculus, bracket flags, and norm experiments on SU(2)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (same as GLPQ_THREADS)");

  HausdorffArgs ha;
  CLI::App* sub_h = app.add_subcommand(
      "hausdorff", "homogeneous dimension and bracket flag of a generating set");
  sub_h->add_option("--builtin", ha.builtin, "built-in algebra: su2 or su3 (default su2)");
  sub_h->add_option("--algebra", ha.file, "JSON file with structure constants");
  sub_h->add_option("--generators", ha.generators, "1-based generator indices, e.g. 1,2")
      ->required();

  SelfTestArgs sa;
  CLI::App* sub_s = app.add_subcommand(
      "fourier-selftest", "orthogonality, roundtrip, Parseval, and eigenvalue checks");
  sub_s->add_option("--band", sa.band, "largest l in the checks (1..6, default 5)");
  sub_s->add_option("--seeds", sa.seeds, "number of random functions (default 100)");
  sub_s->add_option("--seed", sa.seed, "base seed (default 12345)");

  HeatDecayArgs hd;
  CLI::App* sub_hd =
      app.add_subcommand("heat-decay", "sup-norm decay exponent of the heat kernel");
  sub_hd->add_option("--op", hd.op, "laplacian or sublaplacian:<i,j,...>")->required();
  sub_hd->add_option("--tmin", hd.t_min, "smallest time (default 1e-3)");
  sub_hd->add_option("--tmax", hd.t_max, "largest time (default 1e-2)");
  sub_hd->add_option("--points", hd.points, "log-spaced sample count (default 9)");
  sub_hd->add_option("--lmax", hd.lmax, "band floor in l units (default 60)");
  sub_hd->add_option("--out", hd.out, "also write the report to this file");

  SharpnessArgs sh;
  CLI::App* sub_sh = app.add_subcommand(
      "bessel-sharpness", "L^p -> L^q ratio growth of a potential operator along heat data");
  sub_sh->add_option("--order", sh.order, "potential parameter a in (1+A)^{-a/2}")->required();
  sub_sh->add_option("--p", sh.p, "source exponent (default 4/3)");
  sub_sh->add_option("--q", sh.q, "target exponent (default 4, 'inf' allowed)");
  sub_sh->add_option("--op", sh.op, "laplacian or sublaplacian:<i,j,...>")->required();
  sub_sh->add_option("--tmin", sh.t_min, "smallest time (default 0.03)");
  sub_sh->add_option("--tmax", sh.t_max, "largest time (default 0.3)");
  sub_sh->add_option("--points", sh.points, "log-spaced sample count (default 7)");
  sub_sh->add_option("--band", sh.band, "fixed band in l units (default 0 = automatic)");
  sub_sh->add_option("--out", sh.out, "also write the report to this file");

  ThresholdArgs th;
  CLI::App* sub_th = app.add_subcommand(
      "threshold", "sharpness probes half an order above and below the critical order");
  sub_th->add_option("--p", th.p, "source exponent (default 4/3)");
  sub_th->add_option("--q", th.q, "target exponent (default 4)");
  sub_th->add_option("--op", th.op, "laplacian or sublaplacian:<i,j,...>")->required();
  sub_th->add_option("--tmin", th.t_min, "smallest time (default 0.03)");
  sub_th->add_option("--tmax", th.t_max, "largest time (default 0.3)");
  sub_th->add_option("--points", th.points, "log-spaced sample count (default 7)");
  sub_th->add_option("--out", th.out, "report file prefix (_above.csv, _below.csv)");

  SeminormArgs se;
  CLI::App* sub_se =
      app.add_subcommand("seminorm", "weighted symbol-class seminorm of a model symbol");
  sub_se->add_option("--symbol", se.symbol, "identity, heat:<t>, bessel:<a>, riesz:<a>")
      ->required();
  sub_se->add_option("--op", se.op, "operator for the symbol and the weight")->required();
  sub_se->add_option("--band", se.band, "band in l units (default 4)");
  sub_se->add_option("--alpha", se.alpha,
                     "difference exponents for entries 11,12,21,22 (default 0,0,0,0)");
  sub_se->add_option("--m", se.m, "order parameter m (default 0)");
  sub_se->add_option("--rho", se.rho, "type parameter rho (default 1)");
  sub_se->add_option("--delta", se.delta, "type parameter delta (default 0)");
  sub_se->add_option("--kappa", se.kappa, "weight exponent scaling (default 1)");
  sub_se->add_option("--side", se.side, "weight side: left or right (default left)");

  OpNormArgs on;
  CLI::App* sub_on =
      app.add_subcommand("opnorm", "lower bound for the L^p -> L^q norm of a model operator");
  sub_on->add_option("--symbol", on.symbol, "identity, heat:<t>, bessel:<a>, riesz:<a>")
      ->required();
  sub_on->add_option("--op", on.op, "operator behind the symbol")->required();
  sub_on->add_option("--band", on.band, "band in l units (default 6)");
  sub_on->add_option("--p", on.p, "source exponent (default 2, 'inf' allowed)");
  sub_on->add_option("--q", on.q, "target exponent (default 2, 'inf' allowed)");
  sub_on->add_option("--seed", on.seed, "seed for the iteration start (default 12345)");
  sub_on->add_option("--iters", on.iters, "power-iteration steps (default 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep --help/--version at 0; fold every parse failure into the
    // invalid-input exit code instead of CLI11's internal codes.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (threads > 0) setenv("GLPQ_THREADS", std::to_string(threads).c_str(), 1);
    if (*sub_h) run_hausdorff(ha);
    if (*sub_s) run_selftest(sa);
    if (*sub_hd) run_heat_decay(hd);
    if (*sub_sh) run_sharpness(sh);
    if (*sub_th) run_threshold(th);
    if (*sub_se) run_seminorm(se);
    if (*sub_on) run_opnorm(on);
  } catch (const glpq::TruncationInsufficient& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const glpq::ResourceLimit& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const glpq::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    // ValidationError, NotHoermander, and anything unexpected.
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
