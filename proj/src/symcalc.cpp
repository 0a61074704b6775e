#include "glpq/symcalc.hpp"

#include "glpq/errors.hpp"
#include "glpq/parallel.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <utility>

namespace glpq {

namespace {

void require_nonempty(const MultiplierSymbol& sigma, const char* what) {
  if (sigma.two_band < 0 || static_cast<int>(sigma.s.size()) != sigma.two_band + 1)
    throw ValidationError(std::string(what) + ": symbol is empty or inconsistently sized");
}

void require_entry(int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1)
    throw ValidationError("difference entry indices must lie in {0, 1}");
}

} // namespace

MultiplierSymbol identity_symbol(int two_band) {
  if (two_band < 0) throw ValidationError("identity_symbol: band must be >= 0");
  MultiplierSymbol out;
  out.two_band = two_band;
  out.s.reserve(two_band + 1);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    out.s.push_back(Eigen::MatrixXcd::Identity(two_l + 1, two_l + 1));
  return out;
}

MultiplierSymbol zero_symbol(int two_band) {
  if (two_band < 0) throw ValidationError("zero_symbol: band must be >= 0");
  MultiplierSymbol out;
  out.two_band = two_band;
  out.s.reserve(two_band + 1);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    out.s.push_back(Eigen::MatrixXcd::Zero(two_l + 1, two_l + 1));
  return out;
}

MultiplierSymbol symbol_of_convolution(const FourierCoefficients& ghat) {
  if (ghat.two_band < 0) throw ValidationError("symbol_of_convolution: empty coefficients");
  MultiplierSymbol out;
  out.two_band = ghat.two_band;
  out.s = ghat.hat;
  return out;
}

FourierCoefficients kernel_coefficients(const MultiplierSymbol& sigma) {
  require_nonempty(sigma, "kernel_coefficients");
  FourierCoefficients out;
  out.two_band = sigma.two_band;
  out.hat = sigma.s;
  return out;
}

std::vector<c64> kernel_from_symbol(const MultiplierSymbol& sigma,
                                    const std::vector<EulerAngles>& points, bool parallel) {
  return evaluate(kernel_coefficients(sigma), points, parallel);
}

MultiplierSymbol compose_symbols(const MultiplierSymbol& a, const MultiplierSymbol& b) {
  require_nonempty(a, "compose_symbols");
  require_nonempty(b, "compose_symbols");
  MultiplierSymbol out;
  out.two_band = std::min(a.two_band, b.two_band);
  out.s.reserve(out.two_band + 1);
  for (int two_l = 0; two_l <= out.two_band; ++two_l) out.s.push_back(a.s[two_l] * b.s[two_l]);
  return out;
}

MultiplierSymbol adjoint_symbol(const MultiplierSymbol& a) {
  require_nonempty(a, "adjoint_symbol");
  MultiplierSymbol out;
  out.two_band = a.two_band;
  out.s.reserve(a.two_band + 1);
  for (int two_l = 0; two_l <= a.two_band; ++two_l) out.s.push_back(a.s[two_l].adjoint().eval());
  return out;
}

FourierCoefficients apply_symbol(const MultiplierSymbol& sigma, const FourierCoefficients& fhat) {
  require_nonempty(sigma, "apply_symbol");
  if (fhat.two_band < 0) throw ValidationError("apply_symbol: empty coefficients");
  FourierCoefficients out;
  out.two_band = std::min(sigma.two_band, fhat.two_band);
  out.hat.reserve(out.two_band + 1);
  for (int two_l = 0; two_l <= out.two_band; ++two_l)
    out.hat.push_back(sigma.s[two_l] * fhat.hat[two_l]);
  return out;
}

MultiplierSymbol truncate_symbol(const MultiplierSymbol& sigma, int two_band) {
  require_nonempty(sigma, "truncate_symbol");
  if (two_band > sigma.two_band)
    throw ValidationError("truncate_symbol: requested band exceeds the stored band");
  MultiplierSymbol out;
  out.two_band = two_band < 0 ? -1 : two_band;
  for (int two_l = 0; two_l <= out.two_band; ++two_l) out.s.push_back(sigma.s[two_l]);
  return out;
}

std::vector<c64> quantize_apply(const MultiplierSymbol& sigma, const FourierCoefficients& fhat,
                                const std::vector<EulerAngles>& points, bool parallel) {
  return evaluate(apply_symbol(sigma, fhat), points, parallel);
}

MultiplierSymbol difference_op(const MultiplierSymbol& sigma, int i, int j) {
  require_nonempty(sigma, "difference_op");
  require_entry(i, j);
  const int new_band = sigma.two_band - 1;
  MultiplierSymbol out;
  out.two_band = new_band;
  if (new_band < 0) return out;
  // Exact route: synthesize the kernel on the grid matched to the stored
  // band, multiply by q_ij(x) = [defining matrix](i,j) - delta_ij (degree-1
  // trigonometric polynomial), and analyse back.  Total integrand degree is
  // at most 2 * two_band, within the grid's exactness range.
  const QuadratureGrid grid = build_grid(sigma.two_band);
  std::vector<c64> kernel = inverse(grid, kernel_coefficients(sigma));
  const c64 shift = (i == j) ? c64(1.0, 0.0) : c64(0.0, 0.0);
  for (std::size_t n = 0; n < kernel.size(); ++n) {
    const Eigen::Matrix2cd u = euler_to_su2(grid.nodes[n]);
    kernel[n] *= u(i, j) - shift;
  }
  FourierCoefficients hat = forward(grid, kernel, new_band);
  out.s = std::move(hat.hat);
  return out;
}

int multi_order(const std::array<int, 4>& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw ValidationError("difference exponents must be non-negative");
    total += a;
  }
  return total;
}

MultiplierSymbol difference_multi(const MultiplierSymbol& sigma, const std::array<int, 4>& alpha) {
  require_nonempty(sigma, "difference_multi");
  const int total = multi_order(alpha);
  if (total > sigma.two_band)
    throw ValidationError("difference order exceeds the symbol band; nothing would remain");
  static constexpr int kEntry[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  MultiplierSymbol cur = sigma;
  for (int e = 0; e < 4; ++e)
    for (int r = 0; r < alpha[e]; ++r) cur = difference_op(cur, kEntry[e][0], kEntry[e][1]);
  return cur;
}

double operator_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double leibniz_residual(const MultiplierSymbol& sigma, const MultiplierSymbol& tau, int i, int j) {
  require_nonempty(sigma, "leibniz_residual");
  require_nonempty(tau, "leibniz_residual");
  require_entry(i, j);
  if (sigma.two_band != tau.two_band)
    throw ValidationError("leibniz_residual: the two symbols must share a band");
  const int reduced = sigma.two_band - 1;
  if (reduced < 0) return 0.0;

  const MultiplierSymbol lhs = difference_op(compose_symbols(sigma, tau), i, j);
  // Entries needed by the product rule: column j of differences of sigma,
  // row i of differences of tau.
  std::array<MultiplierSymbol, 2> dsig_col, dtau_row;
  for (int k = 0; k < 2; ++k) {
    dsig_col[k] = difference_op(sigma, k, j);
    dtau_row[k] = difference_op(tau, i, k);
  }
  const MultiplierSymbol sig_t = truncate_symbol(sigma, reduced);
  const MultiplierSymbol tau_t = truncate_symbol(tau, reduced);

  double sup = 0.0;
  for (int two_l = 0; two_l <= reduced; ++two_l) {
    Eigen::MatrixXcd r = lhs.s[two_l];
    r -= dsig_col[i].s[two_l] * tau_t.s[two_l];
    r -= sig_t.s[two_l] * dtau_row[j].s[two_l];
    for (int k = 0; k < 2; ++k) r -= dsig_col[k].s[two_l] * dtau_row[k].s[two_l];
    sup = std::max(sup, operator_norm(r));
  }
  return sup;
}

namespace {

/// (I + A(l))^p for the Hermitian positive semidefinite invariant-operator
/// matrix A(l).  Diagonal models skip the eigensolve.
Eigen::MatrixXcd weight_power(const InvariantOperator& op, int two_l, double p) {
  const int dim = two_l + 1;
  if (diagonal_in_weight_basis(op)) {
    const std::vector<double> spec = operator_spectrum(op, two_l);
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) w(k, k) = std::pow(1.0 + spec[k], p);
    return w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(operator_matrix(op, two_l));
  Eigen::VectorXd powered = es.eigenvalues();
  for (int k = 0; k < dim; ++k) powered(k) = std::pow(1.0 + std::max(powered(k), 0.0), p);
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

double seminorm(const MultiplierSymbol& sigma, const std::array<int, 4>& alpha, double m,
                double rho, double delta, const InvariantOperator& weight_op, WeightSide side,
                double kappa_scaling, int beta_order) {
  require_nonempty(sigma, "seminorm");
  const int total = multi_order(alpha);
  const MultiplierSymbol d = difference_multi(sigma, alpha);
  if (d.two_band < 0) throw ValidationError("seminorm: difference order exhausts the band");
  const double exponent = kappa_scaling * (rho * total - delta * beta_order - m);
  double sup = 0.0;
  for (int two_l = 0; two_l <= d.two_band; ++two_l) {
    const Eigen::MatrixXcd w = weight_power(weight_op, two_l, 0.5 * exponent);
    const double v = (side == WeightSide::Left) ? operator_norm(w * d.s[two_l])
                                                : operator_norm(d.s[two_l] * w);
    sup = std::max(sup, v);
  }
  return sup;
}

FullSymbol full_from_multiplier(const QuadratureGrid& grid, const MultiplierSymbol& sigma) {
  require_nonempty(sigma, "full_from_multiplier");
  FullSymbol out;
  out.grid = grid;
  out.two_band = sigma.two_band;
  out.at.assign(grid.nodes.size(), sigma);
  return out;
}

namespace {

void require_full(const FullSymbol& sigma, const char* what) {
  if (sigma.two_band < 0 || sigma.at.size() != sigma.grid.nodes.size())
    throw ValidationError(std::string(what) + ": node-sampled symbol is inconsistently sized");
  for (const MultiplierSymbol& s : sigma.at)
    if (s.two_band != sigma.two_band)
      throw ValidationError(std::string(what) + ": per-node bands disagree");
}

} // namespace

std::vector<c64> quantize_apply(const FullSymbol& sigma, const FourierCoefficients& fhat,
                                bool parallel) {
  require_full(sigma, "quantize_apply");
  if (fhat.two_band < 0) throw ValidationError("quantize_apply: empty coefficients");
  std::vector<c64> out(sigma.grid.nodes.size());
  par::for_each_index(out.size(), parallel, [&](std::size_t n) {
    const std::vector<EulerAngles> pt{sigma.grid.nodes[n]};
    out[n] = evaluate(apply_symbol(sigma.at[n], fhat), pt, false)[0];
  });
  return out;
}

FullSymbol x_derivative(const FullSymbol& sigma, int field) {
  require_full(sigma, "x_derivative");
  const int xband = sigma.grid.two_band_limit;
  FullSymbol out;
  out.grid = sigma.grid;
  out.two_band = sigma.two_band;
  out.at.assign(sigma.at.size(), zero_symbol(sigma.two_band));
  // Precompute the derived representation per shell of the x-dependence.
  std::vector<Eigen::MatrixXcd> gen;
  gen.reserve(xband + 1);
  for (int two_l = 0; two_l <= xband; ++two_l) gen.push_back(derived_rep(two_l, field));
  // Differentiate each matrix entry of the symbol as a scalar function of x:
  // samples -> coefficients -> per-shell left action of the generator ->
  // samples.  The grid is exact for functions up to its band-limit
  // parameter, which bounds the admissible x-dependence.
  std::vector<c64> samples(sigma.at.size());
  for (int two_l = 0; two_l <= sigma.two_band; ++two_l) {
    const int dim = two_l + 1;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        for (std::size_t n = 0; n < samples.size(); ++n) samples[n] = sigma.at[n].s[two_l](r, c);
        FourierCoefficients hat = forward(sigma.grid, samples, xband);
        for (int two_lp = 0; two_lp <= xband; ++two_lp)
          hat.hat[two_lp] = (gen[two_lp] * hat.hat[two_lp]).eval();
        const std::vector<c64> deriv = inverse(sigma.grid, hat);
        for (std::size_t n = 0; n < deriv.size(); ++n) out.at[n].s[two_l](r, c) = deriv[n];
      }
  }
  return out;
}

double seminorm_full(const FullSymbol& sigma, const std::array<int, 4>& alpha,
                     const std::vector<int>& beta_fields, double m, double rho, double delta,
                     const InvariantOperator& weight_op, WeightSide side, double kappa_scaling) {
  require_full(sigma, "seminorm_full");
  if (beta_fields.size() > 1)
    throw ValidationError("seminorm_full: at most one x-derivative is supported");
  FullSymbol work = sigma;
  for (int f : beta_fields) work = x_derivative(work, f);
  const int beta_order = static_cast<int>(beta_fields.size());
  std::vector<double> per_node(work.at.size(), 0.0);
  par::for_each_index(per_node.size(), true, [&](std::size_t n) {
    per_node[n] =
        seminorm(work.at[n], alpha, m, rho, delta, weight_op, side, kappa_scaling, beta_order);
  });
  double sup = 0.0;
  for (double v : per_node) sup = std::max(sup, v);
  return sup;
}

} // namespace glpq
