#include "glpq/normlab.hpp"

#include "glpq/errors.hpp"
#include "glpq/liealg.hpp"
#include "glpq/parallel.hpp"
#include "glpq/repr.hpp"
#include "glpq/rng.hpp"
#include "glpq/speccalc.hpp"
#include "glpq/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace glpq {

double lp_norm(const QuadratureGrid& grid, const std::vector<c64>& samples, double p,
               bool parallel) {
  if (samples.size() != grid.nodes.size())
    throw ValidationError("lp_norm: sample count does not match the grid");
  const std::size_t nblocks = par::block_count(samples.size());
  std::vector<double> scratch(
      std::min<std::size_t>(static_cast<std::size_t>(par::max_threads()), nblocks));
  if (std::isinf(p)) {
    double best = 0.0;
    par::blocked_reduce(
        nblocks, parallel, scratch,
        [&](std::size_t b, double& partial) {
          const auto [lo, hi] = par::block_range(b, samples.size());
          double m = 0.0;
          for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(samples[i]));
          partial = m;
        },
        [&](std::size_t, double& partial) { best = std::max(best, partial); });
    return best;
  }
  if (!(p >= 1.0)) throw ValidationError("lp_norm: need p >= 1");
  double total = 0.0;
  par::blocked_reduce(
      nblocks, parallel, scratch,
      [&](std::size_t b, double& partial) {
        const auto [lo, hi] = par::block_range(b, samples.size());
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
          s += grid.weights[i] * std::pow(std::abs(samples[i]), p);
        partial = s;
      },
      [&](std::size_t, double& partial) { total += partial; });
  return std::pow(total, 1.0 / p);
}

c64 identity_value(const FourierCoefficients& f) {
  c64 acc(0.0, 0.0);
  for (int two_l = 0; two_l <= f.two_band; ++two_l)
    acc += static_cast<double>(two_l + 1) * f.hat[two_l].trace();
  return acc;
}

namespace {

/// Full-grid norms are affordable only for moderate bands; diagonal models
/// bypass this cap entirely.
constexpr int kGridBandCap = 24;

/// True when the coefficients are real, diagonal, and weight-symmetric, so
/// the kernel depends on (alpha+gamma, beta) only and the two-variable norm
/// path applies.
bool zonal_eligible_blocks(const std::vector<Eigen::MatrixXcd>& blocks) {
  for (const Eigen::MatrixXcd& b : blocks) {
    const int dim = static_cast<int>(b.rows());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        if (b(i, j) != c64(0.0, 0.0)) return false;
      }
    for (int i = 0; i < dim; ++i) {
      if (b(i, i).imag() != 0.0) return false;
      if (b(i, i).real() != b(dim - 1 - i, dim - 1 - i).real()) return false;
    }
  }
  return true;
}

double zonal_norm_of(const FourierCoefficients& f, double p) {
  const ZonalGrid zg = build_zonal_grid(f.two_band);
  const auto coeff = [&](int two_l, int two_m) {
    const int k = (two_m + two_l) / 2;
    return f.hat[two_l](k, k).real();
  };
  const std::vector<double> vals = zonal_synthesis(zg, coeff, true);
  const double n = zonal_lp_norm(zg, vals, p, true);
  if (std::isinf(p)) return std::max(n, std::abs(identity_value(f)));
  return n;
}

struct NormContext {
  int two_band;
  std::unique_ptr<QuadratureGrid> g3;

  const QuadratureGrid& grid3() {
    if (!g3) {
      if (two_band > kGridBandCap)
        throw ResourceLimit("opnorm: full-grid norms need band <= " +
                            std::to_string(kGridBandCap) +
                            " half-steps; use a weight-diagonal model or a smaller band");
      g3 = std::make_unique<QuadratureGrid>(build_grid(two_band));
    }
    return *g3;
  }

  double norm(const FourierCoefficients& f, double p) {
    if (p == 2.0) return plancherel_norm(f);
    if (zonal_eligible_blocks(f.hat)) return zonal_norm_of(f, p);
    const QuadratureGrid& g = grid3();
    const std::vector<c64> s = inverse(g, f);
    const double n = lp_norm(g, s, p);
    if (std::isinf(p)) return std::max(n, std::abs(identity_value(f)));
    return n;
  }
};

std::vector<std::pair<std::string, FourierCoefficients>> curated_witnesses(int two_band) {
  std::vector<std::pair<std::string, FourierCoefficients>> out;
  for (const double s : {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    FourierCoefficients f = zero_coefficients(two_band);
    for (int two_l = 0; two_l <= two_band; ++two_l) {
      const double l = 0.5 * two_l;
      f.hat[two_l].diagonal().setConstant(std::exp(-s * l * (l + 1.0)));
    }
    out.emplace_back("heat:" + format_g12(s), std::move(f));
  }
  {
    FourierCoefficients f = zero_coefficients(two_band);
    for (int two_l = 0; two_l <= two_band; ++two_l) f.hat[two_l].diagonal().setConstant(1.0);
    out.emplace_back("delta", std::move(f));
  }
  {
    FourierCoefficients f = zero_coefficients(two_band);
    f.hat[0](0, 0) = 1.0;
    out.emplace_back("constant", std::move(f));
  }
  return out;
}

void power_iteration(const MultiplierSymbol& sigma, double p, double q, std::uint64_t seed,
                     int iterations, NormContext& ctx, double& best, std::string& witness) {
  const QuadratureGrid& g = ctx.grid3();
  const int two_band = sigma.two_band;
  Rng rng(seed);
  FourierCoefficients f = zero_coefficients(two_band);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    for (int r = 0; r < two_l + 1; ++r)
      for (int c = 0; c < two_l + 1; ++c) f.hat[two_l](r, c) = rng.complex_symmetric();
  const double p_conj = p / (p - 1.0);
  const MultiplierSymbol sigma_adj = adjoint_symbol(sigma);
  for (int it = 0; it < iterations; ++it) {
    const std::vector<c64> fs = inverse(g, f);
    const double fp = lp_norm(g, fs, p);
    if (!(fp > 0.0)) return;
    const FourierCoefficients ghat = apply_symbol(sigma, f);
    const std::vector<c64> u = inverse(g, ghat);
    const double uq = lp_norm(g, u, q);
    const double ratio = uq / fp;
    if (ratio > best) {
      best = ratio;
      witness = "power-iteration";
    }
    if (!(uq > 0.0)) return;
    // Dual element of u in L^q', so that <u, y> = ||u||_q and ||y||_q' = 1.
    std::vector<c64> y(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double au = std::abs(u[i]);
      y[i] = au == 0.0 ? c64(0.0, 0.0)
                       : (u[i] / au) * (std::pow(au, q - 1.0) / std::pow(uq, q - 1.0));
    }
    const FourierCoefficients what = apply_symbol(sigma_adj, forward(g, y, two_band));
    const std::vector<c64> w = inverse(g, what);
    // Steepest-growth element for the L^p constraint.
    std::vector<c64> v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double aw = std::abs(w[i]);
      v[i] = aw == 0.0 ? c64(0.0, 0.0) : (w[i] / aw) * std::pow(aw, p_conj - 1.0);
    }
    f = forward(g, v, two_band);  // re-projection onto the band
    const double scale = plancherel_norm(f);
    if (!(scale > 0.0)) return;
    for (int two_l = 0; two_l <= two_band; ++two_l) f.hat[two_l] /= scale;
  }
}

void require_exponent(double p, const char* name) {
  if (std::isinf(p)) return;
  if (!(p >= 1.0) || !std::isfinite(p))
    throw ValidationError(std::string("opnorm: ") + name + " must lie in [1, infinity]");
}

} // namespace

OpNormEstimate opnorm_lower_bound(const MultiplierSymbol& sigma, double p, double q,
                                  std::uint64_t seed, int power_iterations) {
  if (sigma.two_band < 0) throw ValidationError("opnorm: empty symbol");
  require_exponent(p, "p");
  require_exponent(q, "q");
  if (power_iterations < 0) throw ValidationError("opnorm: negative iteration count");

  if (p == 2.0 && q == 2.0) {
    // Plancherel: the operator norm is exactly the largest per-shell norm.
    double best = 0.0;
    int best_shell = 0;
    for (int two_l = 0; two_l <= sigma.two_band; ++two_l) {
      const double v = operator_norm(sigma.s[two_l]);
      if (v > best) {
        best = v;
        best_shell = two_l;
      }
    }
    return {best, "shell-svd:two_l=" + std::to_string(best_shell)};
  }

  NormContext ctx{sigma.two_band, nullptr};
  double best = 0.0;
  std::string witness = "none";
  for (const auto& [name, f] : curated_witnesses(sigma.two_band)) {
    const double den = ctx.norm(f, p);
    if (!(den > 1e-300)) continue;
    const double num = ctx.norm(apply_symbol(sigma, f), q);
    const double ratio = num / den;
    if (ratio > best) {
      best = ratio;
      witness = name;
    }
  }
  if (p > 1.0 && q > 1.0 && !std::isinf(p) && !std::isinf(q) && power_iterations > 0 &&
      sigma.two_band <= kGridBandCap)
    power_iteration(sigma, p, q, seed, power_iterations, ctx, best, witness);
  return {best, witness};
}

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

void require_window(double t_min, double t_max, const char* what) {
  if (!(t_min > 0.0) || !(t_max > t_min))
    throw ValidationError(std::string(what) + ": need 0 < t_min < t_max");
}

/// Eigenvalue of the weight-diagonal operator at shell l, weight m.
double diagonal_eigenvalue(std::size_t nfields, int two_l, int two_m) {
  const double l = 0.5 * two_l, m = 0.5 * two_m;
  const double cas = l * (l + 1.0);
  if (nfields == 1) return m * m;
  if (nfields == 2) return cas - m * m;
  return cas;
}

/// Synthesis value at the identity for a diagonal model, where every d^l_mm
/// equals 1:  sum_l (2l+1) sum_m coeff(l, m).
double diagonal_identity_value(int two_band, const std::function<double(int, int)>& coeff) {
  double acc = 0.0;
  for (int two_l = 0; two_l <= two_band; ++two_l) {
    double shell = 0.0;
    for (int two_m = two_l; two_m >= 2; two_m -= 2) shell += 2.0 * coeff(two_l, two_m);
    if (two_l % 2 == 0) shell += coeff(two_l, 0);
    acc += (two_l + 1) * shell;
  }
  return acc;
}

} // namespace

ExperimentReport heat_decay_experiment(const HeatDecayParams& par) {
  if (par.points < 5) throw ValidationError("heat-decay: need at least 5 points");
  require_window(par.t_min, par.t_max, "heat-decay");
  if (par.floor_l < 0 || par.floor_l > 20000)
    throw ValidationError("heat-decay: floor_l out of range [0, 20000]");
  const InvariantOperator op = sublaplacian_operator(par.fields);
  const HoermanderFlag flag = hoermander_flag(builtin_su2(), op.fields);
  const int q_dim = flag.hausdorff_Q;

  ExperimentReport r;
  r.parameters["experiment"] = "heat-decay";
  r.parameters["fields"] = op.fields;
  r.parameters["t_min"] = par.t_min;
  r.parameters["t_max"] = par.t_max;
  r.parameters["points"] = par.points;
  r.parameters["floor_l"] = par.floor_l;
  r.parameters["Q"] = q_dim;

  int max_used = 0;
  for (const double t : log_spaced(par.t_min, par.t_max, par.points)) {
    int used = 0;
    const double v = heat_trace_adaptive(t, op, 2 * par.floor_l, &used, true);
    max_used = std::max(max_used, used);
    r.rows.emplace_back(t, v);
  }
  r.parameters["max_two_l"] = max_used;

  const FitResult fit = fit_loglog(r.rows);
  r.slope = fit.slope;
  r.slope_stderr = fit.slope_stderr;
  r.verdict =
      std::abs(fit.slope + 0.5 * q_dim) <= 0.1 ? "matches-dimension" : "off-prediction";
  return r;
}

ExperimentReport bessel_sharpness_experiment(const SharpnessParams& par) {
  if (par.points < 3) throw ValidationError("sharpness: need at least 3 points");
  require_window(par.t_min, par.t_max, "sharpness");
  require_exponent(par.p, "p");
  require_exponent(par.q, "q");
  if (par.fixed_two_band < 0) throw ValidationError("sharpness: negative band");
  const InvariantOperator op = sublaplacian_operator(par.fields);
  const bool diagonal = diagonal_in_weight_basis(op);
  const std::size_t nf = op.fields.size();

  ExperimentReport r;
  r.parameters["experiment"] = "bessel-sharpness";
  r.parameters["order"] = par.order;
  r.parameters["p"] = par.p;
  r.parameters["q"] = par.q;
  r.parameters["fields"] = op.fields;
  r.parameters["t_min"] = par.t_min;
  r.parameters["t_max"] = par.t_max;
  r.parameters["points"] = par.points;
  r.parameters["band"] = par.fixed_two_band;

  for (const double t : log_spaced(par.t_min, par.t_max, par.points)) {
    const int two_b = par.fixed_two_band > 0 ? par.fixed_two_band : pick_band(t);
    double num = 0.0, den = 0.0;
    if (diagonal) {
      const ZonalGrid zg = build_zonal_grid(two_b);
      const double a = par.order;
      const std::function<double(int, int)> num_coeff = [&](int two_l, int two_m) {
        const double lam = diagonal_eigenvalue(nf, two_l, two_m);
        return std::pow(1.0 + lam, -0.5 * a) * std::exp(-t * lam);
      };
      const std::function<double(int, int)> den_coeff = [&](int two_l, int two_m) {
        return std::exp(-t * diagonal_eigenvalue(nf, two_l, two_m));
      };
      num = zonal_lp_norm(zg, zonal_synthesis(zg, num_coeff), par.q);
      den = zonal_lp_norm(zg, zonal_synthesis(zg, den_coeff), par.p);
      if (std::isinf(par.q))
        num = std::max(num, std::abs(diagonal_identity_value(two_b, num_coeff)));
      if (std::isinf(par.p))
        den = std::max(den, std::abs(diagonal_identity_value(two_b, den_coeff)));
    } else {
      if (two_b > kGridBandCap)
        throw ResourceLimit(
            "sharpness: fields without a weight-diagonal matrix need a fixed band <= " +
            std::to_string(kGridBandCap) + " half-steps (band <= 12 in l units)");
      const QuadratureGrid g = build_grid(two_b);
      const MultiplierSymbol heat = heat_symbol(t, op, two_b);
      const FourierCoefficients fden = kernel_coefficients(heat);
      const FourierCoefficients fnum =
          kernel_coefficients(compose_symbols(bessel_symbol(par.order, op, two_b), heat));
      num = lp_norm(g, inverse(g, fnum), par.q);
      den = lp_norm(g, inverse(g, fden), par.p);
      if (std::isinf(par.q)) num = std::max(num, std::abs(identity_value(fnum)));
      if (std::isinf(par.p)) den = std::max(den, std::abs(identity_value(fden)));
    }
    if (!(den > 0.0))
      throw TruncationInsufficient("sharpness: reference norm vanished at t = " + format_g12(t));
    r.rows.emplace_back(t, num / den);
  }

  const FitResult fit = fit_loglog(r.rows);
  r.slope = fit.slope;
  r.slope_stderr = fit.slope_stderr;
  r.verdict = fit.slope < -0.1 ? "unbounded-like" : "bounded-like";
  return r;
}

ThresholdResult threshold_experiment(const ThresholdParams& par) {
  const InvariantOperator op = sublaplacian_operator(par.fields);
  const HoermanderFlag flag = hoermander_flag(builtin_su2(), op.fields);
  const double mstar = critical_order(par.p, par.q, 1.0, static_cast<double>(flag.hausdorff_Q));

  SharpnessParams sp;
  sp.p = par.p;
  sp.q = par.q;
  sp.fields = par.fields;
  sp.t_min = par.t_min;
  sp.t_max = par.t_max;
  sp.points = par.points;

  ThresholdResult out;
  out.critical = mstar;

  sp.order = -(mstar + 0.5);
  out.above = bessel_sharpness_experiment(sp);
  out.above.parameters["critical_order"] = mstar;
  out.above.parameters["offset"] = 0.5;

  sp.order = -(mstar - 0.5);
  out.below = bessel_sharpness_experiment(sp);
  out.below.parameters["critical_order"] = mstar;
  out.below.parameters["offset"] = -0.5;

  out.flipped =
      out.above.verdict == "unbounded-like" && out.below.verdict == "bounded-like";
  return out;
}

} // namespace glpq
