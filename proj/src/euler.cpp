#include "glpq/euler.hpp"

#include <cmath>

namespace glpq {

Eigen::Matrix2cd euler_to_su2(const EulerAngles& g) {
  const double ch = std::cos(0.5 * g.beta);
  const double sh = std::sin(0.5 * g.beta);
  const c64 ea = std::polar(1.0, 0.5 * (g.alpha + g.gamma));
  const c64 eb = std::polar(1.0, 0.5 * (g.alpha - g.gamma));
  Eigen::Matrix2cd u;
  const c64 A = ea * ch;
  const c64 B = eb * sh;
  u << A, B, -std::conj(B), std::conj(A);
  return u;
}

EulerAngles su2_to_euler(const Eigen::Matrix2cd& u) {
  const c64 A = u(0, 0);
  const c64 B = u(0, 1);
  const double na = std::abs(A);
  const double nb = std::abs(B);
  EulerAngles g;
  g.beta = 2.0 * std::atan2(nb, na);
  const double pa = na < 1e-14 ? 0.0 : std::arg(A);
  const double pb = nb < 1e-14 ? 0.0 : std::arg(B);
  g.alpha = pa + pb;
  g.gamma = pa - pb;
  if (g.alpha < 0.0) g.alpha += 4.0 * M_PI;
  if (g.gamma < 0.0) g.gamma += 4.0 * M_PI;
  return g;
}

EulerAngles compose_angles(const EulerAngles& a, const EulerAngles& b) {
  return su2_to_euler(Eigen::Matrix2cd(euler_to_su2(a) * euler_to_su2(b)));
}

EulerAngles inverse_angles(const EulerAngles& g) {
  return su2_to_euler(Eigen::Matrix2cd(euler_to_su2(g).adjoint()));
}

} // namespace glpq
