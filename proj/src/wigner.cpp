#include "glpq/wigner.hpp"

#include "glpq/errors.hpp"

#include <cmath>

namespace glpq {

namespace {

// Boundary value d^{l0}_{mn}(beta) where two_l0 = max(|two_m|, |two_n|),
// c = cos(beta/2), s = sin(beta/2).  Closed form: a power of c times a
// binomial-square-root ladder in (sign * s).
double d_seed(int two_l0, int two_m, int two_n, double c, double s) {
  int a, b;
  double sgn;
  if (std::abs(two_m) >= std::abs(two_n)) {
    if (two_m >= 0) {
      a = (two_l0 + two_n) / 2; b = (two_l0 - two_n) / 2; sgn = -1.0;
    } else {
      a = (two_l0 - two_n) / 2; b = (two_l0 + two_n) / 2; sgn = 1.0;
    }
  } else {
    if (two_n >= 0) {
      a = (two_l0 + two_m) / 2; b = (two_l0 - two_m) / 2; sgn = 1.0;
    } else {
      a = (two_l0 - two_m) / 2; b = (two_l0 + two_m) / 2; sgn = -1.0;
    }
  }
  double val = 1.0;
  for (int k = 0; k < a; ++k) val *= c;
  const double ss = sgn * s;
  for (int k = 1; k <= b; ++k) val *= std::sqrt(static_cast<double>(a + k) / k) * ss;
  return val;
}

} // namespace

std::vector<Eigen::MatrixXd> wigner_d_tower(int two_L, double beta) {
  if (two_L < 0) throw ValidationError("wigner_d_tower: band must be >= 0");
  std::vector<Eigen::MatrixXd> d(two_L + 1);
  for (int two_l = 0; two_l <= two_L; ++two_l) d[two_l].setZero(two_l + 1, two_l + 1);

  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double x = std::cos(beta);

  for (int two_m = -two_L; two_m <= two_L; ++two_m) {
    for (int two_n = -two_L; two_n <= two_L; ++two_n) {
      if (((two_n - two_m) & 1) != 0) continue;  // weights share the shell parity
      const int two_l0 = std::max(std::abs(two_m), std::abs(two_n));
      const double m = 0.5 * two_m;
      const double n = 0.5 * two_n;
      double dm1 = 0.0;
      double d0 = d_seed(two_l0, two_m, two_n, c, s);
      d[two_l0]((two_l0 + two_m) / 2, (two_l0 + two_n) / 2) = d0;
      for (int two_l = two_l0; two_l + 2 <= two_L; two_l += 2) {
        double d1;
        if (two_l == 0) {
          d1 = x;  // m = n = 0 first step; the generic denominator vanishes
        } else {
          const double l = 0.5 * two_l;
          const double lp = l + 1.0;
          const double num =
              (2.0 * l + 1.0) * (l * lp * x - m * n) * d0 -
              lp * std::sqrt((l * l - m * m) * (l * l - n * n)) * dm1;
          d1 = num / (l * std::sqrt((lp * lp - m * m) * (lp * lp - n * n)));
        }
        d[two_l + 2]((two_l + 2 + two_m) / 2, (two_l + 2 + two_n) / 2) = d1;
        dm1 = d0;
        d0 = d1;
      }
    }
  }
  return d;
}

std::vector<Eigen::MatrixXcd> wigner_D_tower(int two_L, const EulerAngles& g) {
  const std::vector<Eigen::MatrixXd> d = wigner_d_tower(two_L, g.beta);
  // phase lookup indexed by two_m + two_L
  std::vector<c64> pa(2 * two_L + 1), pc(2 * two_L + 1);
  for (int two_m = -two_L; two_m <= two_L; ++two_m) {
    pa[two_m + two_L] = std::polar(1.0, -0.5 * two_m * g.alpha);
    pc[two_m + two_L] = std::polar(1.0, -0.5 * two_m * g.gamma);
  }
  std::vector<Eigen::MatrixXcd> D(two_L + 1);
  for (int two_l = 0; two_l <= two_L; ++two_l) {
    const int dim = two_l + 1;
    D[two_l].resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const c64 fa = pa[2 * i - two_l + two_L];
      for (int j = 0; j < dim; ++j) {
        D[two_l](i, j) = fa * d[two_l](i, j) * pc[2 * j - two_l + two_L];
      }
    }
  }
  return D;
}

Eigen::MatrixXcd wigner_D(int two_l, const EulerAngles& g) {
  return wigner_D_tower(two_l, g).back();
}

} // namespace glpq
