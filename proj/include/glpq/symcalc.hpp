#pragma once

#include "glpq/euler.hpp"
#include "glpq/fourier.hpp"
#include "glpq/grid.hpp"
#include "glpq/repr.hpp"

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace glpq {

/// x-independent matrix symbol: one complex (two_l+1)^2 matrix per shell
/// through the band limit.  Quantizes to a right-convolution operator.
struct MultiplierSymbol {
  int two_band = -1;
  std::vector<Eigen::MatrixXcd> s;

  Eigen::MatrixXcd& block(int two_l) { return s[two_l]; }
  const Eigen::MatrixXcd& block(int two_l) const { return s[two_l]; }
};

/// sigma(l) = Identity for every shell.
MultiplierSymbol identity_symbol(int two_band);

/// All-zero symbol.
MultiplierSymbol zero_symbol(int two_band);

/// Symbol of the operator f -> f * g given the coefficients of g.
MultiplierSymbol symbol_of_convolution(const FourierCoefficients& ghat);

/// Coefficients of the right-convolution kernel of the symbol (inverse view).
FourierCoefficients kernel_coefficients(const MultiplierSymbol& sigma);

/// Kernel samples: inverse Fourier transform of the symbol at the points.
std::vector<c64> kernel_from_symbol(const MultiplierSymbol& sigma,
                                    const std::vector<EulerAngles>& points,
                                    bool parallel = true);

/// Symbol of the composition Op(a) Op(b): per-shell product a(l) b(l).
MultiplierSymbol compose_symbols(const MultiplierSymbol& a, const MultiplierSymbol& b);

/// Symbol of the adjoint operator: per-shell conjugate transpose.
MultiplierSymbol adjoint_symbol(const MultiplierSymbol& a);

/// Coefficient-side action: (sigma fhat)(l) = sigma(l) fhat(l).
FourierCoefficients apply_symbol(const MultiplierSymbol& sigma, const FourierCoefficients& fhat);

/// Drop shells above the new band.
MultiplierSymbol truncate_symbol(const MultiplierSymbol& sigma, int two_band);

/// Operator evaluation:  (Op(sigma) f)(x) = sum_l (2l+1) Tr(D^l(x) sigma(l) fhat(l)).
std::vector<c64> quantize_apply(const MultiplierSymbol& sigma, const FourierCoefficients& fhat,
                                const std::vector<EulerAngles>& points, bool parallel = true);

/// First-order difference at entry (i, j) of the defining representation
/// (0-based, i,j in {0,1}): Fourier-side multiplication of the kernel by
/// q_ij(x) = D^{1/2}(x)_ij - delta_ij.  The band shrinks by one half-step
/// (two_band decreases by 1); exact on the retained shells.
MultiplierSymbol difference_op(const MultiplierSymbol& sigma, int i, int j);

/// Composition of first-order differences in the fixed order
/// D_00^a00  D_01^a01  D_10^a10  D_11^a11 (left to right), with
/// alpha = {a00, a01, a10, a11}.
MultiplierSymbol difference_multi(const MultiplierSymbol& sigma, const std::array<int, 4>& alpha);

int multi_order(const std::array<int, 4>& alpha);  // |alpha|

/// Max over retained shells of the operator norm of
///   D_ij(sigma tau) - (D_ij sigma) tau - sigma (D_ij tau)
///   - sum_k (D_kj sigma)(D_ik tau),
/// the exact finite product rule induced by the defining-coefficient cocycle
/// q_ij(xy) = q_ij(x) + q_ij(y) + sum_k q_ik(x) q_kj(y) under this library's
/// convolution orientation.  Machine-zero for exact inputs.
double leibniz_residual(const MultiplierSymbol& sigma, const MultiplierSymbol& tau, int i, int j);

enum class WeightSide { Left, Right };

/// Symbol-class seminorm: sup over retained shells of
///   || W(l)^side  ( difference_multi(sigma, alpha) )(l) ||_op,
/// with weight W(l) = (I + A(l))^{e/2}, A the chosen invariant operator and
/// exponent e = kappa_scaling * (rho |alpha| - delta |beta| - m).
/// beta_order is the number of x-derivatives (0 for multipliers).
double seminorm(const MultiplierSymbol& sigma, const std::array<int, 4>& alpha, double m,
                double rho, double delta, const InvariantOperator& weight_op, WeightSide side,
                double kappa_scaling, int beta_order = 0);

/// x-dependent symbol sampled at the nodes of a fixed grid.
struct FullSymbol {
  QuadratureGrid grid;
  int two_band = -1;
  std::vector<MultiplierSymbol> at;  // one multiplier per grid node
};

/// Constant-in-x embedding.
FullSymbol full_from_multiplier(const QuadratureGrid& grid, const MultiplierSymbol& sigma);

/// Operator evaluation at the grid nodes only.
std::vector<c64> quantize_apply(const FullSymbol& sigma, const FourierCoefficients& fhat,
                                bool parallel = true);

/// Left-invariant x-derivative along a built-in field, computed through the
/// Fourier side of the x-dependence entry by entry.  The x-band of the symbol
/// must not exceed the grid's band-limit parameter.
FullSymbol x_derivative(const FullSymbol& sigma, int field);

/// Seminorm of an x-dependent symbol: sup over nodes and shells, with
/// first-order x-derivatives applied per beta_fields (at most one here).
double seminorm_full(const FullSymbol& sigma, const std::array<int, 4>& alpha,
                     const std::vector<int>& beta_fields, double m, double rho, double delta,
                     const InvariantOperator& weight_op, WeightSide side, double kappa_scaling);

/// Largest singular value (operator norm) helper used throughout.
double operator_norm(const Eigen::MatrixXcd& a);

} // namespace glpq
