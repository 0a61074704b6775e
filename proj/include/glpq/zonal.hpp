#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace glpq {

/// 2D sampling grid for functions of (psi, beta) only — the form taken by
/// kernels of operators whose symbol is diagonal in the weight basis:
///   f(psi, beta) = sum_l (2l+1) sum_m  c(l, m) e^{-i 2m psi} d^l_{mm}(beta).
/// psi = (alpha+gamma)/2 runs uniformly over [0, 2pi); beta is resolved by
/// Gauss-Legendre nodes in cos(beta).  The normalized measure is
/// (1/(2pi)) dpsi * (1/2) sin(beta) dbeta.
struct ZonalGrid {
  int two_band = -1;                // largest shell resolved
  int n_psi = 0;                    // power of two above the Nyquist need
  std::vector<double> cos_beta;     // Gauss-Legendre nodes, ascending
  std::vector<double> beta_weight;  // matching weights, sum 2
};

/// Angular resolution n_psi: smallest power of two >= 4*two_band + 4.
/// Latitudinal resolution: max(64, two_band/3 + 8) nodes.
ZonalGrid build_zonal_grid(int two_band);

/// Smallest band (a positive multiple of 16) at which a heat-type tail at
/// time t is negligible against the t^{-2} bulk:
///   (two_B + 1)^2 exp(-t two_B / 2)  <  1e-8 * 4 / t^2.
int pick_band(double t);

/// Values f(psi_k, beta_j) on the grid (row j = beta index, column
/// k = psi index, row-major) for the diagonal model with entries
/// coeff(two_l, two_m).  The model must satisfy coeff(l, -m) = coeff(l, m);
/// only two_m >= 0 is evaluated and the conjugate channels are mirrored,
/// which makes the synthesis real.
std::vector<double> zonal_synthesis(const ZonalGrid& grid,
                                    const std::function<double(int, int)>& coeff,
                                    bool parallel = true);

/// L^p norm of grid values against the normalized measure; p = infinity
/// gives the max of |f|.  Fixed accumulation order regardless of threading.
double zonal_lp_norm(const ZonalGrid& grid, const std::vector<double>& values, double p,
                     bool parallel = true);

/// In-place forward radix-2 transform: a[k] <- sum_j a[j] exp(-2 pi i j k / N).
/// N must be a power of two.  Fixed butterfly order, so results are
/// reproducible to the bit across runs and thread counts.
void fft_radix2(std::vector<std::complex<double>>& a);

} // namespace glpq
