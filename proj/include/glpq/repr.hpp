#pragma once

#include <Eigen/Dense>
#include <vector>

namespace glpq {

/// Weight-raising operator J+ in the ascending-weight basis:
/// (J+)_{i+1,i} = sqrt((l - m_i)(l + m_i + 1)), m_i = -l + i.
Eigen::MatrixXd angular_momentum_plus(int two_l);

/// Diagonal weight operator Jz = diag(-l, -l+1, ..., l).
Eigen::MatrixXd angular_momentum_z(int two_l);

/// Derived representation of the built-in invariant fields on the shell two_l:
/// field 1 -> -i Jx, field 2 -> -i Jy, field 3 -> -i Jz.  These satisfy
/// [X1, X2] = X3 and cyclic, matching the built-in bracket table.
Eigen::MatrixXcd derived_rep(int two_l, int field);

/// -(X1^2 + X2^2 + X3^2) on the shell: equals l(l+1) I exactly in exact
/// arithmetic.
Eigen::MatrixXcd casimir_matrix(int two_l);

/// -sum_{a in fields} X_a^2 (Hermitian, positive semidefinite).
Eigen::MatrixXcd sublaplacian_matrix(int two_l, const std::vector<int>& fields);

/// A negative sum of squares of built-in fields: the full Laplacian for
/// fields = {1,2,3}, a sub-Laplacian for proper subsets.
struct InvariantOperator {
  std::vector<int> fields;  // distinct values from {1,2,3}, nonempty
};

InvariantOperator laplacian_operator();                       // {1,2,3}
InvariantOperator sublaplacian_operator(std::vector<int> f);  // validated subset

/// Matrix of the operator on the shell.
Eigen::MatrixXcd operator_matrix(const InvariantOperator& op, int two_l);

/// Exact closed-form eigenvalues in ascending-weight order (the matrix is
/// conjugate to a weight-basis diagonal for every field subset):
/// one field -> m^2; two fields -> l(l+1) - m^2; three -> l(l+1).
std::vector<double> operator_spectrum(const InvariantOperator& op, int two_l);

/// True when the operator matrix itself is diagonal in the ascending-weight
/// basis ({3}, {1,2}, {1,2,3}), so spectral functions are plain diagonals.
bool diagonal_in_weight_basis(const InvariantOperator& op);

} // namespace glpq
