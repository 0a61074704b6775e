#include "glpq/zonal.hpp"

#include "glpq/errors.hpp"
#include "glpq/gauss_legendre.hpp"
#include "glpq/parallel.hpp"
#include "glpq/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace glpq {

namespace {
using cplx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

ZonalGrid build_zonal_grid(int two_band) {
  if (two_band < 0) throw ValidationError("build_zonal_grid: band must be >= 0");
  ZonalGrid g;
  g.two_band = two_band;
  int m = 1;
  while (m < 4 * two_band + 4) m <<= 1;
  g.n_psi = m;
  const int k = std::max(64, two_band / 3 + 8);
  gauss_legendre(k, g.cos_beta, g.beta_weight);
  return g;
}

int pick_band(double t) {
  if (!(t > 0.0)) throw ValidationError("pick_band: time must be positive");
  const double target = 1e-8 * 4.0 / (t * t);
  for (int two_b = 16; two_b <= (1 << 26); two_b += 16) {
    const double dim = two_b + 1.0;
    if (dim * dim * std::exp(-0.5 * t * two_b) < target) return two_b;
  }
  throw ResourceLimit("pick_band: no admissible band below 2^26 (time too small)");
}

void fft_radix2(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ValidationError("fft_radix2: length must be a power of two");
  if (n == 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles from independent trig evaluations (no recurrence drift).
  std::vector<cplx> tw(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    tw[j] = cplx(std::cos(ang), std::sin(ang));
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * tw[k * stride];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
  }
}

std::vector<double> zonal_synthesis(const ZonalGrid& grid,
                                    const std::function<double(int, int)>& coeff, bool parallel) {
  if (grid.two_band < 0 || grid.n_psi <= 0 || grid.cos_beta.empty())
    throw ValidationError("zonal_synthesis: grid is empty");
  const int two_b = grid.two_band;
  const std::size_t nbeta = grid.cos_beta.size();
  const std::size_t npsi = static_cast<std::size_t>(grid.n_psi);
  if (static_cast<int>(npsi) < 2 * two_b + 2)
    throw ValidationError("zonal_synthesis: angular resolution below the band");

  // Per-channel coefficient tables (2l+1) * coeff(l, m), evaluated once per
  // (l, m) pair rather than once per latitude.
  std::vector<std::vector<double>> table(static_cast<std::size_t>(two_b + 1));
  par::for_each_index(table.size(), parallel, [&](std::size_t tm) {
    const int two_m = static_cast<int>(tm);
    std::vector<double>& row = table[tm];
    row.resize(static_cast<std::size_t>((two_b - two_m) / 2 + 1));
    for (int two_l = two_m, idx = 0; two_l <= two_b; two_l += 2, ++idx)
      row[static_cast<std::size_t>(idx)] = (two_l + 1) * coeff(two_l, two_m);
  });

  // Channel sums c[two_m][j] = sum_l (2l+1) coeff(l, m) d^l_{mm}(cos_beta[j]),
  // one independent ascending-l recursion per (two_m, beta) pair.
  std::vector<double> chan(static_cast<std::size_t>(two_b + 1) * nbeta, 0.0);
  par::for_each_index(chan.size(), parallel, [&](std::size_t idx) {
    const int two_m = static_cast<int>(idx / nbeta);
    const std::size_t j = idx % nbeta;
    const std::vector<double>& row = table[static_cast<std::size_t>(two_m)];
    double acc = 0.0;
    wigner_d_diagonal_series(two_m, two_b, grid.cos_beta[j], [&](int two_l, double d) {
      acc += row[static_cast<std::size_t>((two_l - two_m) / 2)] * d;
    });
    chan[idx] = acc;
  });

  // Per-latitude angular synthesis: channels +-two_m carry equal weight, so
  // the transform output is real up to rounding.
  std::vector<double> values(nbeta * npsi, 0.0);
  par::for_each_index(nbeta, parallel, [&](std::size_t j) {
    std::vector<cplx> spec(npsi, cplx(0.0, 0.0));
    spec[0] = chan[j];
    for (int two_m = 1; two_m <= two_b; ++two_m) {
      const double c = chan[static_cast<std::size_t>(two_m) * nbeta + j];
      spec[static_cast<std::size_t>(two_m)] = c;
      spec[npsi - static_cast<std::size_t>(two_m)] = c;
    }
    fft_radix2(spec);
    for (std::size_t k = 0; k < npsi; ++k) values[j * npsi + k] = spec[k].real();
  });
  return values;
}

double zonal_lp_norm(const ZonalGrid& grid, const std::vector<double>& values, double p,
                     bool parallel) {
  const std::size_t nbeta = grid.cos_beta.size();
  const std::size_t npsi = static_cast<std::size_t>(grid.n_psi);
  if (values.size() != nbeta * npsi)
    throw ValidationError("zonal_lp_norm: value count does not match the grid");
  if (std::isinf(p)) {
    std::vector<double> row_max(nbeta, 0.0);
    par::for_each_index(nbeta, parallel, [&](std::size_t j) {
      double m = 0.0;
      for (std::size_t k = 0; k < npsi; ++k) m = std::max(m, std::abs(values[j * npsi + k]));
      row_max[j] = m;
    });
    double m = 0.0;
    for (double v : row_max) m = std::max(m, v);
    return m;
  }
  if (!(p >= 1.0)) throw ValidationError("zonal_lp_norm: need p >= 1");
  std::vector<double> row_sum(nbeta, 0.0);
  par::for_each_index(nbeta, parallel, [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < npsi; ++k) s += std::pow(std::abs(values[j * npsi + k]), p);
    row_sum[j] = s;
  });
  double total = 0.0;
  const double inv_npsi = 1.0 / static_cast<double>(npsi);
  for (std::size_t j = 0; j < nbeta; ++j) total += 0.5 * grid.beta_weight[j] * row_sum[j] * inv_npsi;
  return std::pow(total, 1.0 / p);
}

} // namespace glpq
