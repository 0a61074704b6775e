#include "glpq/repr.hpp"

#include "glpq/errors.hpp"
#include "glpq/euler.hpp"

#include <algorithm>
#include <cmath>

namespace glpq {

Eigen::MatrixXd angular_momentum_plus(int two_l) {
  const int dim = two_l + 1;
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(dim, dim);
  const double l = 0.5 * two_l;
  for (int i = 0; i + 1 < dim; ++i) {
    const double m = -l + i;
    jp(i + 1, i) = std::sqrt((l - m) * (l + m + 1.0));
  }
  return jp;
}

Eigen::MatrixXd angular_momentum_z(int two_l) {
  const int dim = two_l + 1;
  Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(dim, dim);
  const double l = 0.5 * two_l;
  for (int i = 0; i < dim; ++i) jz(i, i) = -l + i;
  return jz;
}

Eigen::MatrixXcd derived_rep(int two_l, int field) {
  const c64 mi{0.0, -1.0};
  const Eigen::MatrixXd jp = angular_momentum_plus(two_l);
  switch (field) {
    case 1:  // -i Jx, Jx = (J+ + J-)/2
      return mi * (0.5 * (jp + jp.transpose()));
    case 2:  // -i Jy = (J- - J+)/2
      return (0.5 * (jp.transpose() - jp)).cast<c64>();
    case 3:  // -i Jz
      return mi * angular_momentum_z(two_l);
    default:
      throw ValidationError("derived_rep: field index must be 1, 2 or 3");
  }
}

Eigen::MatrixXcd casimir_matrix(int two_l) {
  return sublaplacian_matrix(two_l, {1, 2, 3});
}

Eigen::MatrixXcd sublaplacian_matrix(int two_l, const std::vector<int>& fields) {
  const int dim = two_l + 1;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a : fields) {
    const Eigen::MatrixXcd x = derived_rep(two_l, a);
    acc -= x * x;
  }
  return acc;
}

namespace {

void check_fields(const std::vector<int>& f) {
  if (f.empty()) throw ValidationError("operator: field set must be nonempty");
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] < 1 || f[a] > 3)
      throw ValidationError("operator: field indices must be in {1,2,3}");
    for (std::size_t b = a + 1; b < f.size(); ++b)
      if (f[a] == f[b]) throw ValidationError("operator: field indices must be distinct");
  }
}

} // namespace

InvariantOperator laplacian_operator() { return {{1, 2, 3}}; }

InvariantOperator sublaplacian_operator(std::vector<int> f) {
  check_fields(f);
  std::sort(f.begin(), f.end());
  return {std::move(f)};
}

Eigen::MatrixXcd operator_matrix(const InvariantOperator& op, int two_l) {
  check_fields(op.fields);
  return sublaplacian_matrix(two_l, op.fields);
}

std::vector<double> operator_spectrum(const InvariantOperator& op, int two_l) {
  check_fields(op.fields);
  const double l = 0.5 * two_l;
  std::vector<double> ev(two_l + 1);
  for (int i = 0; i <= two_l; ++i) {
    const double m = -l + i;
    switch (op.fields.size()) {
      case 1: ev[i] = m * m; break;
      case 2: ev[i] = l * (l + 1.0) - m * m; break;
      default: ev[i] = l * (l + 1.0); break;
    }
  }
  return ev;
}

bool diagonal_in_weight_basis(const InvariantOperator& op) {
  check_fields(op.fields);
  std::vector<int> f = op.fields;
  std::sort(f.begin(), f.end());
  return f == std::vector<int>{3} || f == std::vector<int>{1, 2} ||
         f == std::vector<int>{1, 2, 3};
}

} // namespace glpq
