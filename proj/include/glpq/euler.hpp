#pragma once

#include <Eigen/Dense>
#include <complex>

namespace glpq {

using c64 = std::complex<double>;

/// Euler angles in the z-y-z convention.  alpha and gamma live on [0, 4*pi)
/// (the double cover needs the extended range), beta on [0, pi].
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

inline EulerAngles identity_angles() { return {0.0, 0.0, 0.0}; }

/// The defining 2x2 unitary in the ascending-weight basis:
///   [[ e^{ i(alpha+gamma)/2} cos(beta/2),  e^{ i(alpha-gamma)/2} sin(beta/2)],
///    [-e^{-i(alpha-gamma)/2} sin(beta/2),  e^{-i(alpha+gamma)/2} cos(beta/2)]]
Eigen::Matrix2cd euler_to_su2(const EulerAngles& g);

/// Inverse chart.  Returns beta in [0, pi]; at the chart's degenerate circles
/// (beta = 0 or pi) the free phase is pushed into alpha resp. split evenly.
EulerAngles su2_to_euler(const Eigen::Matrix2cd& u);

/// Group product expressed in angles: euler of (su2(a) * su2(b)).
EulerAngles compose_angles(const EulerAngles& a, const EulerAngles& b);

/// Inverse element.
EulerAngles inverse_angles(const EulerAngles& g);

} // namespace glpq
