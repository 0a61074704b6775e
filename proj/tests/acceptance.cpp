// Acceptance gate: eight end-to-end checks, one PASS/FAIL line each.
// Exit status is the number of failed checks.

#include "glpq/errors.hpp"
#include "glpq/fourier.hpp"
#include "glpq/liealg.hpp"
#include "glpq/normlab.hpp"
#include "glpq/repr.hpp"
#include "glpq/rng.hpp"
#include "glpq/speccalc.hpp"
#include "glpq/symcalc.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace glpq;

namespace {

int g_failures = 0;

void run_criterion(int id, const std::string& label, double time_limit_s,
                   const std::function<bool(std::string&)>& body) {
  std::string why;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs > time_limit_s) {
    ok = false;
    why = "exceeded the time limit of " + std::to_string(time_limit_s) + " s";
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
              secs, why.empty() ? "" : " -- ", why.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::vector<Rational> basis_vec(int dim, int i_1based) {
  std::vector<Rational> v(dim, Rational(0));
  v[i_1based - 1] = 1;
  return v;
}

FourierCoefficients random_coefficients(int two_band, std::uint64_t seed) {
  Rng rng(seed);
  FourierCoefficients f = zero_coefficients(two_band);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    for (int r = 0; r <= two_l; ++r)
      for (int c = 0; c <= two_l; ++c) f.block(two_l)(r, c) = rng.complex_symmetric();
  return f;
}

// ---------------------------------------------------------------------------
// 1. exact bracket tables and bracket-generating flags
// ---------------------------------------------------------------------------
bool criterion1(std::string& why) {
  struct Term {
    int coeff;
    int k;
  };
  // Eight-dimensional commutator table written out cell by cell as an
  // independent oracle.  Cell (8,1) carries -2 X2, the value antisymmetry
  // forces opposite cell (1,8).
  const std::vector<Term> expected[8][8] = {
      {{}, {{-1, 7}}, {{1, 5}}, {{-1, 6}}, {{-1, 3}}, {{1, 4}}, {{4, 2}}, {{2, 2}}},
      {{{1, 7}}, {}, {{1, 6}}, {{1, 5}}, {{-1, 4}}, {{-1, 3}}, {{-4, 1}}, {{-2, 1}}},
      {{{-1, 5}}, {{-1, 6}}, {}, {{-1, 8}}, {{1, 1}}, {{1, 2}}, {{2, 4}}, {{4, 4}}},
      {{{1, 6}}, {{-1, 5}}, {{1, 8}}, {}, {{1, 2}}, {{-1, 1}}, {{-2, 3}}, {{-4, 3}}},
      {{{1, 3}}, {{1, 4}}, {{-1, 1}}, {{-1, 2}}, {}, {{1, 8}, {-1, 7}}, {{2, 6}}, {{-2, 6}}},
      {{{-1, 4}}, {{1, 3}}, {{-1, 2}}, {{1, 1}}, {{1, 7}, {-1, 8}}, {}, {{-2, 5}}, {{2, 5}}},
      {{{-4, 2}}, {{4, 1}}, {{-2, 4}}, {{2, 3}}, {{-2, 6}}, {{2, 5}}, {}, {}},
      {{{-2, 2}}, {{2, 1}}, {{-4, 4}}, {{4, 3}}, {{2, 6}}, {{-2, 5}}, {}, {}},
  };
  const LieAlgebraSpec su3 = builtin_su3();
  if (su3.dim != 8) {
    why = "eight-dimensional algebra has wrong dimension";
    return false;
  }
  int bad_cells = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      std::vector<Rational> want(8, Rational(0));
      for (const Term& t : expected[i - 1][j - 1]) want[t.k - 1] += t.coeff;
      if (bracket(su3, basis_vec(8, i), basis_vec(8, j)) != want) ++bad_cells;
    }
  if (bad_cells != 0) {
    why = std::to_string(bad_cells) + " of 64 bracket cells differ";
    return false;
  }
  const HoermanderFlag f3 = hoermander_flag(su3, {1, 2, 3, 4, 5, 6});
  if (!(f3.dims == std::vector<int>{6, 8} && f3.kappa == 2 && f3.hausdorff_Q == 10)) {
    why = "six-generator flag of the eight-dimensional algebra is wrong";
    return false;
  }
  const HoermanderFlag f2 = hoermander_flag(builtin_su2(), {1, 2});
  if (!(f2.dims == std::vector<int>{2, 3} && f2.kappa == 2 && f2.hausdorff_Q == 4)) {
    why = "two-generator flag of the three-dimensional algebra is wrong";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. orthogonality, round trip, Parseval, and invariant spectra
// ---------------------------------------------------------------------------
bool criterion2(std::string& why) {
  const double tol = 1e-10;
  const double schur = schur_orthogonality_residual(10);  // through l = 5
  if (!(schur < tol)) {
    why = "orthogonality residual " + std::to_string(schur);
    return false;
  }

  const int B = 5;
  const QuadratureGrid grid = build_grid(B);
  double worst_rt = 0.0, worst_pv = 0.0;
  for (int k = 0; k < 100; ++k) {
    const FourierCoefficients fhat = random_coefficients(B, 9000 + k);
    const std::vector<c64> samples = inverse(grid, fhat);
    const FourierCoefficients back = forward(grid, samples, B);
    for (int two_l = 0; two_l <= B; ++two_l)
      worst_rt = std::max(worst_rt,
                          (back.block(two_l) - fhat.block(two_l)).cwiseAbs().maxCoeff());
    worst_pv = std::max(worst_pv,
                        std::abs(lp_norm(grid, samples, 2.0) - plancherel_norm(fhat)));
  }
  if (!(worst_rt < tol)) {
    why = "round-trip residual " + std::to_string(worst_rt);
    return false;
  }
  if (!(worst_pv < tol)) {
    why = "Parseval residual " + std::to_string(worst_pv);
    return false;
  }

  double worst_cas = 0.0, worst_sub = 0.0;
  for (int two_l = 0; two_l <= 20; ++two_l) {
    const double l = 0.5 * two_l;
    const Eigen::MatrixXcd cas = casimir_matrix(two_l);
    const Eigen::MatrixXcd want =
        l * (l + 1.0) * Eigen::MatrixXcd::Identity(two_l + 1, two_l + 1);
    worst_cas = std::max(worst_cas, (cas - want).cwiseAbs().maxCoeff());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sublaplacian_matrix(two_l, {1, 2}));
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + two_l + 1);
    std::vector<double> formula;
    for (int j = 0; j <= two_l; ++j) {
      const double m = -l + j;
      formula.push_back(l * (l + 1.0) - m * m);
    }
    std::sort(formula.begin(), formula.end());
    for (int j = 0; j <= two_l; ++j)
      worst_sub = std::max(worst_sub, std::abs(got[j] - formula[j]));
  }
  if (!(worst_cas < tol)) {
    why = "full-operator eigenvalue residual " + std::to_string(worst_cas);
    return false;
  }
  if (!(worst_sub < tol)) {
    why = "two-field eigenvalue residual " + std::to_string(worst_sub);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. convolution operator against direct quadrature; exact L2 operator norm
// ---------------------------------------------------------------------------
bool criterion3(std::string& why) {
  const int B = 4;  // band 2 in l units
  const FourierCoefficients fhat = random_coefficients(B, 31);
  const FourierCoefficients ghat = random_coefficients(B, 32);
  const QuadratureGrid grid = build_grid(B);
  const std::vector<c64> f_samples = inverse(grid, fhat);

  std::vector<EulerAngles> points{identity_angles()};
  Rng rng(33);
  for (int k = 0; k < 24; ++k)
    points.push_back({rng.uniform() * 4.0 * M_PI, rng.uniform() * M_PI,
                      rng.uniform() * 4.0 * M_PI});

  const MultiplierSymbol sigma = symbol_of_convolution(ghat);
  const std::vector<c64> fast = quantize_apply(sigma, fhat, points);
  double worst = 0.0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<EulerAngles> shifts;
    shifts.reserve(grid.size());
    for (const EulerAngles& y : grid.nodes)
      shifts.push_back(compose_angles(inverse_angles(y), points[p]));
    const std::vector<c64> g_shift = evaluate(ghat, shifts);
    c64 brute = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      brute += grid.weights[k] * f_samples[k] * g_shift[k];
    worst = std::max(worst, std::abs(fast[p] - brute));
  }
  if (!(worst < 1e-8)) {
    why = "direct quadrature differs by " + std::to_string(worst);
    return false;
  }

  double sup = 0.0;
  for (int two_l = 0; two_l <= B; ++two_l) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sigma.block(two_l));
    sup = std::max(sup, svd.singularValues()(0));
  }
  const OpNormEstimate est = opnorm_lower_bound(sigma, 2.0, 2.0, 1, 0);
  if (!(std::abs(est.lower_bound - sup) <= 1e-9)) {
    why = "L2->L2 norm " + std::to_string(est.lower_bound) + " vs largest shell value " +
          std::to_string(sup);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 4. finite product rule residuals on seeded symbol pairs
// ---------------------------------------------------------------------------
bool criterion4(std::string& why) {
  double worst = 0.0;
  for (int pair = 0; pair < 50; ++pair) {
    MultiplierSymbol sigma = identity_symbol(4), tau = identity_symbol(4);
    Rng rng(4000 + pair);
    for (int two_l = 0; two_l <= 4; ++two_l)
      for (int r = 0; r <= two_l; ++r)
        for (int c = 0; c <= two_l; ++c) {
          sigma.block(two_l)(r, c) = rng.complex_symmetric();
          tau.block(two_l)(r, c) = rng.complex_symmetric();
        }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        worst = std::max(worst, leibniz_residual(sigma, tau, i, j));
  }
  if (!(worst < 1e-9)) {
    why = "largest product-rule residual " + std::to_string(worst);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. heat kernel sup-norm decay exponents
// ---------------------------------------------------------------------------
bool criterion5(std::string& why) {
  HeatDecayParams par;  // t in [1e-3, 1e-2], 9 points, floor l = 60
  par.fields = {1, 2};
  const ExperimentReport sub = heat_decay_experiment(par);
  if (!(std::abs(sub.slope - (-2.0)) <= 0.1)) {
    why = "two-field slope " + std::to_string(sub.slope) + " not within 0.1 of -2";
    return false;
  }
  if (sub.parameters.at("max_two_l").get<int>() < 120) {
    why = "two-field run stopped below the floor shell";
    return false;
  }
  par.fields = {1, 2, 3};
  const ExperimentReport full = heat_decay_experiment(par);
  if (!(std::abs(full.slope - (-1.5)) <= 0.1)) {
    why = "three-field slope " + std::to_string(full.slope) + " not within 0.1 of -1.5";
    return false;
  }
  if (sub.verdict != "matches-dimension" || full.verdict != "matches-dimension") {
    why = "verdicts: " + sub.verdict + " / " + full.verdict;
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. smoothing-order sharpness verdicts across the critical order
// ---------------------------------------------------------------------------
bool criterion6(std::string& why) {
  SharpnessParams par;  // p = 4/3, q = 4, fields {1,2}, t in [0.03, 0.3]
  par.order = 1.0;
  const ExperimentReport low = bessel_sharpness_experiment(par);
  if (!(std::abs(low.slope - (-0.5)) <= 0.15) || low.verdict != "unbounded-like") {
    why = "order-1 slope " + std::to_string(low.slope) + " verdict " + low.verdict;
    return false;
  }
  par.order = 2.5;
  const ExperimentReport high = bessel_sharpness_experiment(par);
  if (!(std::abs(high.slope) <= 0.1) || high.verdict != "bounded-like") {
    why = "order-2.5 slope " + std::to_string(high.slope) + " verdict " + high.verdict;
    return false;
  }
  const ThresholdResult th = threshold_experiment(ThresholdParams{});
  if (th.critical != -2.0) {
    why = "critical order " + std::to_string(th.critical) + " is not exactly -2";
    return false;
  }
  if (!th.flipped) {
    why = "verdict did not flip across the critical order (above: " + th.above.verdict +
          ", below: " + th.below.verdict + ")";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7. critical order formula on a 1000-point sweep
// ---------------------------------------------------------------------------
bool criterion7(std::string& why) {
  int checked = 0;
  for (int i = 1; i <= 10; ++i) {
    const double p = 1.0 + i / 8.0;  // includes p = 2 at i = 8
    for (const double s : {0.0, 0.25, 0.5, 0.75}) {
      const double q = p + s;  // includes q = 2 boundaries
      for (const double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const double Q : {3.0, 4.0, 5.0, 6.0, 8.0}) {
          const double got = critical_order(p, q, rho, Q);
          const double want =
              -Q * (1.0 / p - 1.0 / q + (1.0 - rho) * std::max({0.5 - 1.0 / p, 1.0 / q - 0.5, 0.0}));
          if (got != want) {
            why = "mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q);
            return false;
          }
          ++checked;
        }
      }
    }
  }
  if (checked != 1000) {
    why = "sweep covered " + std::to_string(checked) + " points, expected 1000";
    return false;
  }
  bool threw = false;
  try {
    critical_order(3.0, 2.0, 1.0, 4.0);
  } catch (const ValidationError&) {
    threw = true;
  }
  if (!threw) {
    why = "p > q was not rejected";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. byte-identical command-line runs across repeated seeds and thread counts
// ---------------------------------------------------------------------------
struct CliRun {
  int status = -1;
  std::string output;
};

CliRun run_cli(const std::string& args, int threads, const std::string& capture) {
  const std::string cmd = "GLPQ_THREADS=" + std::to_string(threads) + " '" +
                          std::string(GLPQ_CLI_PATH) + "' " + args + " > " + capture +
                          " 2>&1";
  CliRun r;
  r.status = std::system(cmd.c_str());
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(capture.c_str());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(path.c_str());
  return buf.str();
}

bool criterion8(std::string& why) {
  struct Case {
    std::string name;
    std::string args;
    std::vector<std::string> out_files;
  };
  const std::vector<Case> cases = {
      {"hausdorff", "hausdorff --builtin su3 --generators 1,2,3,4,5,6", {}},
      {"fourier-selftest", "fourier-selftest --band 3 --seeds 5 --seed 4242", {}},
      {"heat-decay",
       "heat-decay --op laplacian --tmin 0.005 --tmax 0.01 --points 5 --lmax 20 "
       "--out acc8_hd.csv",
       {"acc8_hd.csv"}},
      {"bessel-sharpness",
       "bessel-sharpness --order 2.5 --op sublaplacian:1,2 --tmin 0.05 --tmax 0.3 "
       "--points 3 --out acc8_bs.csv",
       {"acc8_bs.csv"}},
      {"threshold",
       "threshold --p 1.5 --q 3 --op sublaplacian:1,2 --tmin 0.05 --tmax 0.3 --points 3 "
       "--out acc8_th",
       {"acc8_th_above.csv", "acc8_th_below.csv"}},
      {"seminorm",
       "seminorm --symbol bessel:2 --op sublaplacian:1,2 --band 4 --alpha 1,0,0,1 --m 1 "
       "--rho 0.5 --side left",
       {}},
      {"opnorm", "opnorm --symbol heat:0.5 --op laplacian --band 3 --p 2 --q 4 --seed 777 "
                 "--iters 6",
       {}},
  };
  for (const Case& c : cases) {
    const CliRun first = run_cli(c.args, 1, "acc8_capture_a.txt");
    std::vector<std::string> first_files;
    for (const std::string& f : c.out_files) first_files.push_back(slurp(f));
    const CliRun second = run_cli(c.args, 2, "acc8_capture_b.txt");
    std::vector<std::string> second_files;
    for (const std::string& f : c.out_files) second_files.push_back(slurp(f));

    if (first.status != 0 || second.status != 0) {
      why = c.name + ": exit status " + std::to_string(first.status) + " / " +
            std::to_string(second.status);
      return false;
    }
    if (first.output.empty() || first.output != second.output) {
      why = c.name + ": stdout differs between same-seed runs";
      return false;
    }
    for (std::size_t k = 0; k < c.out_files.size(); ++k)
      if (first_files[k].empty() || first_files[k] != second_files[k]) {
        why = c.name + ": output file " + c.out_files[k] + " differs between runs";
        return false;
      }
  }
  return true;
}

} // namespace

int main() {
  run_criterion(1, "exact bracket tables and bracket-generating flags", 1.0, criterion1);
  run_criterion(2, "orthogonality, round trip, Parseval, and invariant spectra", 30.0,
                criterion2);
  run_criterion(3, "convolution operator against direct quadrature and the exact L2 norm",
                60.0, criterion3);
  run_criterion(4, "finite product rule residuals on seeded symbol pairs", 60.0, criterion4);
  run_criterion(5, "heat kernel sup-norm decay exponents", 120.0, criterion5);
  run_criterion(6, "smoothing-order sharpness verdicts across the critical order", 180.0,
                criterion6);
  run_criterion(7, "critical order formula on a 1000-point sweep", 1.0, criterion7);
  run_criterion(8, "byte-identical command-line runs across seeds and thread counts", 600.0,
                criterion8);
  if (g_failures == 0) std::printf("all 8 acceptance criteria passed\n");
  return g_failures;
}
