#include "glpq/speccalc.hpp"

#include "glpq/errors.hpp"
#include "glpq/parallel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace glpq {

MultiplierSymbol spectral_symbol(const std::function<double(double)>& phi,
                                 const InvariantOperator& op, int two_band) {
  if (two_band < 0) throw ValidationError("spectral_symbol: band must be >= 0");
  const bool diagonal = diagonal_in_weight_basis(op);
  MultiplierSymbol out;
  out.two_band = two_band;
  out.s.reserve(two_band + 1);
  for (int two_l = 0; two_l <= two_band; ++two_l) {
    const int dim = two_l + 1;
    if (diagonal) {
      const std::vector<double> spec = operator_spectrum(op, two_l);
      Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(dim, dim);
      for (int k = 0; k < dim; ++k) {
        const double v = phi(spec[k]);
        if (!std::isfinite(v))
          throw ValidationError("spectral_symbol: non-finite value at eigenvalue " +
                                std::to_string(spec[k]));
        blk(k, k) = v;
      }
      out.s.push_back(std::move(blk));
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(operator_matrix(op, two_l));
      Eigen::VectorXd lam = es.eigenvalues();
      for (int k = 0; k < dim; ++k) {
        const double v = phi(lam(k));
        if (!std::isfinite(v))
          throw ValidationError("spectral_symbol: non-finite value at eigenvalue " +
                                std::to_string(lam(k)));
        lam(k) = v;
      }
      out.s.push_back(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint());
    }
  }
  return out;
}

MultiplierSymbol bessel_symbol(double order, const InvariantOperator& op, int two_band) {
  return spectral_symbol([order](double lam) { return std::pow(1.0 + lam, -0.5 * order); }, op,
                         two_band);
}

MultiplierSymbol heat_symbol(double t, const InvariantOperator& op, int two_band) {
  if (!(t > 0.0)) throw ValidationError("heat_symbol: time must be positive");
  return spectral_symbol([t](double lam) { return std::exp(-t * lam); }, op, two_band);
}

MultiplierSymbol riesz_symbol(double order, const InvariantOperator& op, int two_band) {
  return spectral_symbol(
      [order](double lam) { return lam < 1e-10 ? 0.0 : std::pow(lam, -0.5 * order); }, op,
      two_band);
}

double shell_heat_sum(double t, const InvariantOperator& op, int two_l) {
  const double dim = static_cast<double>(two_l + 1);
  const double l = 0.5 * two_l;
  const double cas = l * (l + 1.0);
  const std::size_t nfields = op.fields.size();
  if (nfields == 3) return dim * dim * std::exp(-t * cas);
  // One or two fields: eigenvalues depend on the weight only through m^2,
  // so the m and -m contributions pair up.  Smaller contributions are
  // accumulated first.
  double acc = 0.0;
  if (nfields == 1) {
    // lambda = m^2, smallest at m = 0; odd shells stop at |two_m| = 1
    for (int two_m = two_l; two_m >= 1; two_m -= 2) {
      const double m = 0.5 * two_m;
      acc += 2.0 * std::exp(-t * m * m);
    }
    if (two_l % 2 == 0) acc += 1.0;  // m = 0 term, exp(0)
  } else {
    // lambda = l(l+1) - m^2, smallest at m = +-l
    for (int two_m = two_l % 2; two_m <= two_l; two_m += 2) {
      const double m = 0.5 * two_m;
      acc += (two_m == 0 ? 1.0 : 2.0) * std::exp(-t * (cas - m * m));
    }
  }
  return dim * acc;
}

namespace {

/// Per-shell sums for shells [lo, hi), computed independently.
std::vector<double> shell_sums(double t, const InvariantOperator& op, int lo, int hi,
                               bool parallel) {
  std::vector<double> s(static_cast<std::size_t>(hi - lo));
  par::for_each_index(s.size(), parallel,
                      [&](std::size_t k) { s[k] = shell_heat_sum(t, op, lo + static_cast<int>(k)); });
  return s;
}

} // namespace

double heat_trace_identity(double t, const InvariantOperator& op, int two_band, bool parallel) {
  if (!(t > 0.0)) throw ValidationError("heat_trace_identity: time must be positive");
  if (two_band < 0) throw ValidationError("heat_trace_identity: band must be >= 0");
  const std::vector<double> s = shell_sums(t, op, 0, two_band + 1, parallel);
  double total = 0.0;
  for (double v : s) total += v;
  if (!(s.back() < 1e-12 * total))
    throw TruncationInsufficient("heat_trace_identity: last shell two_l=" +
                                 std::to_string(two_band) + " still contributes " +
                                 std::to_string(s.back() / total) + " of the total");
  return total;
}

double heat_trace_adaptive(double t, const InvariantOperator& op, int floor_two_l,
                           int* used_two_band, bool parallel) {
  if (!(t > 0.0)) throw ValidationError("heat_trace_adaptive: time must be positive");
  if (floor_two_l < 0) throw ValidationError("heat_trace_adaptive: floor must be >= 0");
  constexpr int kChunk = 512;
  constexpr int kCap = 262144;
  double cum = 0.0;
  for (int lo = 0; lo <= kCap; lo += kChunk) {
    const int hi = std::min(lo + kChunk, kCap + 1);
    const std::vector<double> s = shell_sums(t, op, lo, hi, parallel);
    for (int two_l = lo; two_l < hi; ++two_l) {
      const double sl = s[static_cast<std::size_t>(two_l - lo)];
      cum += sl;
      if (two_l >= floor_two_l && sl < 1e-12 * cum) {
        if (used_two_band) *used_two_band = two_l;
        return cum;
      }
    }
  }
  throw ResourceLimit("heat_trace_adaptive: no convergence through shell two_l=" +
                      std::to_string(kCap) + " (time too small)");
}

double critical_order(double p, double q, double rho, double Q) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ValidationError("critical_order: need 1 < p < inf");
  if (!(q > 1.0) || !std::isfinite(q)) throw ValidationError("critical_order: need 1 < q < inf");
  if (p > q) throw ValidationError("critical_order: need p <= q");
  if (!(rho >= 0.0 && rho <= 1.0)) throw ValidationError("critical_order: need 0 <= rho <= 1");
  if (!(Q >= 1.0)) throw ValidationError("critical_order: need Q >= 1");
  const double bump = std::max({0.5 - 1.0 / p, 1.0 / q - 0.5, 0.0});
  return -Q * (1.0 / p - 1.0 / q + (1.0 - rho) * bump);
}

} // namespace glpq
