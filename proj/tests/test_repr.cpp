#include <doctest.h>

#include "glpq/euler.hpp"
#include "glpq/repr.hpp"
#include "glpq/wigner.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

using namespace glpq;

TEST_CASE("derived fields satisfy the built-in bracket table") {
  for (int two_l : {1, 2, 3, 4, 8}) {
    const Eigen::MatrixXcd x1 = derived_rep(two_l, 1);
    const Eigen::MatrixXcd x2 = derived_rep(two_l, 2);
    const Eigen::MatrixXcd x3 = derived_rep(two_l, 3);
    CHECK((x1 * x2 - x2 * x1 - x3).norm() < 1e-12);
    CHECK((x2 * x3 - x3 * x2 - x1).norm() < 1e-12);
    CHECK((x3 * x1 - x1 * x3 - x2).norm() < 1e-12);
    // skew-adjoint
    CHECK((x1 + x1.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("quadratic invariant is the scalar l(l+1)") {
  for (int two_l = 0; two_l <= 20; ++two_l) {
    const double l = 0.5 * two_l;
    const Eigen::MatrixXcd c = casimir_matrix(two_l);
    const Eigen::MatrixXcd expect =
        l * (l + 1.0) * Eigen::MatrixXcd::Identity(two_l + 1, two_l + 1);
    CHECK((c - expect).norm() < 1e-10);
  }
}

TEST_CASE("two-field operator has eigenvalues l(l+1) - m^2") {
  for (int two_l = 0; two_l <= 20; ++two_l) {
    const double l = 0.5 * two_l;
    const Eigen::MatrixXcd a = sublaplacian_matrix(two_l, {1, 2});
    CHECK((a - a.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + two_l + 1);
    std::vector<double> expect;
    for (int i = 0; i <= two_l; ++i) {
      const double m = -l + i;
      expect.push_back(l * (l + 1.0) - m * m);
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i <= two_l; ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-10);
  }
}

TEST_CASE("derived fields are the infinitesimal right translations") {
  // central difference of t -> D^l(g * exp(t X)) at 0 equals D^l(g) dt(X)
  const double t = 1e-5;
  const EulerAngles g{0.9, 0.7, 2.3};
  const Eigen::Matrix2cd u = euler_to_su2(g);
  for (int field = 1; field <= 3; ++field) {
    for (int two_l : {1, 2, 3}) {
      const Eigen::Matrix2cd x2 = derived_rep(1, field);
      // exp(t X) in the defining representation, then back through the chart
      const Eigen::Matrix2cd e_p = (t * x2).exp();
      const Eigen::Matrix2cd e_m = (-t * x2).exp();
      const Eigen::MatrixXcd dp = wigner_D(two_l, su2_to_euler(u * e_p));
      const Eigen::MatrixXcd dm = wigner_D(two_l, su2_to_euler(u * e_m));
      const Eigen::MatrixXcd deriv = (dp - dm) / (2.0 * t);
      const Eigen::MatrixXcd expect = wigner_D(two_l, g) * derived_rep(two_l, field);
      CHECK((deriv - expect).norm() < 1e-8);
    }
  }
}
