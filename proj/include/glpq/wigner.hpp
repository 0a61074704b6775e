#pragma once

#include "glpq/euler.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace glpq {

/// Real rotation ("little-d") matrices d^l(beta) for all two_l = 0..two_L in
/// the ascending-weight basis: row/column index i corresponds to weight
/// m = -l + i.  Computed by the three-term recursion in l for each fixed
/// weight pair, self-starting from closed-form boundary seeds; accurate to
/// machine precision for the band sizes used here.
///
/// Returned vector is indexed by two_l; entry two_l has size (two_l+1)^2.
std::vector<Eigen::MatrixXd> wigner_d_tower(int two_L, double beta);

/// Full matrix coefficients D^l(g)_{mn} = e^{-i m alpha} d^l_{mn}(beta)
/// e^{-i n gamma} for all two_l = 0..two_L.
std::vector<Eigen::MatrixXcd> wigner_D_tower(int two_L, const EulerAngles& g);

/// Single matrix D^l(g).
Eigen::MatrixXcd wigner_D(int two_l, const EulerAngles& g);

/// Diagonal entries d^l_{mm}(beta) for fixed two_m, for all
/// two_l = |two_m|, |two_m|+2, ..., two_L, streamed through `emit(two_l, value)`.
/// Specialized recursion used by the fast zonal-norm path; never materializes
/// the full tower.
template <class Emit>
void wigner_d_diagonal_series(int two_m, int two_L, double cos_beta, Emit&& emit) {
  const int two_l0 = two_m < 0 ? -two_m : two_m;
  if (two_l0 > two_L) return;
  const double x = cos_beta;
  // seed: d^{l0}_{mm} = cos(beta/2)^{2|m|} = ((1+x)/2)^{|m|}, |m| = two_l0/2
  double dm1 = 0.0;  // d^{l-1}
  double d0 = 1.0;   // d^{l}
  {
    const double ch2 = 0.5 * (1.0 + x);
    for (int k = 0; k < two_l0 / 2; ++k) d0 *= ch2;
    if (two_l0 % 2 != 0) d0 *= std::sqrt(ch2);  // half-integer |m|
  }
  emit(two_l0, d0);
  const double m = 0.5 * two_m;
  const double mm = m * m;
  for (int two_l = two_l0; two_l + 2 <= two_L; two_l += 2) {
    double d1;
    if (two_l == 0) {
      d1 = x * d0;  // first step from l = 0 (recursion denominator vanishes)
    } else {
      const double l = 0.5 * two_l;
      const double lp = l + 1.0;
      const double num = (2.0 * l + 1.0) * (l * lp * x - mm) * d0 - lp * (l * l - mm) * dm1;
      d1 = num / (l * (lp * lp - mm));
    }
    emit(two_l + 2, d1);
    dm1 = d0;
    d0 = d1;
  }
}

} // namespace glpq
