#include <doctest.h>

#include "glpq/errors.hpp"
#include "glpq/normlab.hpp"
#include "glpq/rng.hpp"
#include "glpq/symcalc.hpp"
#include "glpq/zonal.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace glpq;

namespace {

// Smooth diagonal model supported on integer shells only; even in two_m.
// Integer-shell diagonal coefficients give a polynomial latitude dependence,
// so the quadrature comparisons below are exact.
double even_shell_coeff(int two_l, int two_m) {
  if (two_l % 2 != 0) return 0.0;
  const double l = 0.5 * two_l, m = 0.5 * two_m;
  return std::exp(-0.2 * l * (l + 1.0)) * (1.0 + 0.1 * m * m);
}

MultiplierSymbol diagonal_symbol(int two_band, const std::function<double(int, int)>& coeff) {
  MultiplierSymbol s = zero_symbol(two_band);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    for (int k = 0; k <= two_l; ++k) s.block(two_l)(k, k) = coeff(two_l, 2 * k - two_l);
  return s;
}

} // namespace

TEST_CASE("radix-2 transform matches the direct sum and validates its input") {
  for (std::size_t n : {std::size_t{1}, std::size_t{8}, std::size_t{16}}) {
    Rng rng(n);
    std::vector<std::complex<double>> a(n);
    for (auto& v : a) v = rng.complex_symmetric();
    std::vector<std::complex<double>> direct(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        direct[k] += a[j] * std::polar(1.0, -2.0 * M_PI * static_cast<double>(j * k) /
                                                static_cast<double>(n));
    std::vector<std::complex<double>> fast = a;
    fft_radix2(fast);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fast[k] - direct[k]) < 1e-12);
  }
  std::vector<std::complex<double>> bad(12, 0.0);
  CHECK_THROWS_AS(fft_radix2(bad), ValidationError);
}

TEST_CASE("grid construction rules") {
  SUBCASE("angular resolution is the next power of two past the Nyquist need") {
    CHECK(build_zonal_grid(10).n_psi == 64);    // 4*10 + 4 = 44 -> 64
    CHECK(build_zonal_grid(300).n_psi == 2048); // 1204 -> 2048
  }
  SUBCASE("latitude node count") {
    CHECK(static_cast<int>(build_zonal_grid(10).cos_beta.size()) == 64);
    CHECK(static_cast<int>(build_zonal_grid(300).cos_beta.size()) == 108);
  }
  SUBCASE("latitude rule integrates the constant") {
    const ZonalGrid g = build_zonal_grid(24);
    double sum = 0.0;
    for (double w : g.beta_weight) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
    for (std::size_t j = 1; j < g.cos_beta.size(); ++j)
      CHECK(g.cos_beta[j] > g.cos_beta[j - 1]);
  }
}

TEST_CASE("band picker satisfies its tail inequality minimally") {
  for (double t : {0.05, 0.2, 0.5}) {
    const int B = pick_band(t);
    CHECK(B % 16 == 0);
    CHECK(B >= 16);
    const auto ok = [&](int two_B) {
      return (two_B + 1.0) * (two_B + 1.0) * std::exp(-t * two_B / 2.0) <
             1e-8 * 4.0 / (t * t);
    };
    CHECK(ok(B));
    if (B > 16) CHECK(!ok(B - 16));
  }
}

TEST_CASE("two-variable synthesis agrees with the full synthesis") {
  const int B = 6;
  const ZonalGrid zg = build_zonal_grid(B);
  const std::vector<double> vals = zonal_synthesis(zg, even_shell_coeff);
  const MultiplierSymbol sigma = diagonal_symbol(B, even_shell_coeff);

  // Sample a subset of zonal nodes as 3D Euler points with psi = (alpha+gamma)/2.
  std::vector<EulerAngles> pts;
  std::vector<double> expect;
  for (std::size_t j = 0; j < zg.cos_beta.size(); j += 17) {
    const double beta = std::acos(zg.cos_beta[j]);
    for (int k = 0; k < zg.n_psi; k += 13) {
      const double psi = 2.0 * M_PI * k / zg.n_psi;
      pts.push_back({2.0 * psi, beta, 0.0});
      expect.push_back(vals[j * zg.n_psi + k]);
    }
  }
  const std::vector<c64> kernel = kernel_from_symbol(sigma, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(kernel[i].imag()) < 1e-12);
    CHECK(kernel[i].real() == doctest::Approx(expect[i]).epsilon(1e-11));
  }
}

TEST_CASE("two-variable norms agree with coefficient-side and full-grid norms") {
  const int B = 6;
  const ZonalGrid zg = build_zonal_grid(B);
  const std::vector<double> vals = zonal_synthesis(zg, even_shell_coeff);
  const MultiplierSymbol sigma = diagonal_symbol(B, even_shell_coeff);

  SUBCASE("L2 equals the coefficient norm") {
    const double zl2 = zonal_lp_norm(zg, vals, 2.0);
    const double pl2 = plancherel_norm(kernel_coefficients(sigma));
    CHECK(zl2 == doctest::Approx(pl2).epsilon(1e-12));
  }
  SUBCASE("L4 equals the full-grid quadrature norm") {
    const QuadratureGrid g3 = build_grid(2 * B);
    const std::vector<c64> samples = kernel_from_symbol(sigma, g3.nodes);
    CHECK(zonal_lp_norm(zg, vals, 4.0) ==
          doctest::Approx(lp_norm(g3, samples, 4.0)).epsilon(1e-12));
  }
  SUBCASE("norms of the constant are one for every exponent") {
    const ZonalGrid g = build_zonal_grid(4);
    const std::vector<double> ones =
        zonal_synthesis(g, [](int two_l, int) { return two_l == 0 ? 1.0 : 0.0; });
    for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
      CHECK(zonal_lp_norm(g, ones, p) == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(zonal_lp_norm(g, ones, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("threading does not change a single bit") {
    const std::vector<double> v1 = zonal_synthesis(zg, even_shell_coeff, true);
    const std::vector<double> v0 = zonal_synthesis(zg, even_shell_coeff, false);
    CHECK(v1 == v0);
    CHECK(zonal_lp_norm(zg, vals, 4.0 / 3.0, true) == zonal_lp_norm(zg, vals, 4.0 / 3.0, false));
  }
}
