#pragma once

#include "glpq/euler.hpp"
#include "glpq/grid.hpp"

#include <Eigen/Dense>
#include <vector>

namespace glpq {

/// Matrix-valued Fourier coefficients indexed by the shell label two_l;
/// block two_l is (two_l+1) x (two_l+1).
struct FourierCoefficients {
  int two_band = -1;  // largest shell stored; -1 means empty
  std::vector<Eigen::MatrixXcd> hat;

  Eigen::MatrixXcd& block(int two_l) { return hat[two_l]; }
  const Eigen::MatrixXcd& block(int two_l) const { return hat[two_l]; }
};

/// All-zero coefficients through the given band.
FourierCoefficients zero_coefficients(int two_band);

/// Analysis:  hat(l) = sum_k w_k f(x_k) D^l(x_k)^H.
/// Exact whenever f is band-limited to grid.two_band_limit - two_band or the
/// product stays within the grid's exactness degree.  Deterministic blocked
/// reduction; `parallel` only selects threading, never the result.
FourierCoefficients forward(const QuadratureGrid& grid, const std::vector<c64>& samples,
                            int two_band, bool parallel = true);

/// Synthesis at the grid nodes:  f(x_k) = sum_l (2l+1) Tr(D^l(x_k) hat(l)).
std::vector<c64> inverse(const QuadratureGrid& grid, const FourierCoefficients& f,
                         bool parallel = true);

/// Synthesis at arbitrary points.
std::vector<c64> evaluate(const FourierCoefficients& f, const std::vector<EulerAngles>& points,
                          bool parallel = true);

/// sqrt( sum_l (2l+1) ||hat(l)||_HS^2 )  — equals the L^2 norm of the synthesis.
double plancherel_norm(const FourierCoefficients& f);

/// Largest |residual| of the Gram matrix of all matrix coefficients through
/// band two_L against the orthogonality prediction
/// <D^l_{mn}, D^{l'}_{m'n'}> = delta delta delta / (2l+1).
/// Builds the exact grid internally.
double schur_orthogonality_residual(int two_L, bool parallel = true);

/// Plain sequential reference implementations.  They share the fixed block
/// partition and merge order with the parallel kernels above, so outputs are
/// bitwise identical; kept separate for testing and benchmarking.
namespace serial {
FourierCoefficients forward(const QuadratureGrid& grid, const std::vector<c64>& samples,
                            int two_band);
std::vector<c64> inverse(const QuadratureGrid& grid, const FourierCoefficients& f);
double schur_orthogonality_residual(int two_L);
} // namespace serial

} // namespace glpq
