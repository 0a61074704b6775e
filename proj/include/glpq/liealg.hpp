#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace glpq {

using Rational = boost::multiprecision::cpp_rational;

/// Finite-dimensional Lie algebra given by exact rational structure constants
/// c^k_{ij} with [X_i, X_j] = sum_k c^k_{ij} X_k (indices 0-based internally).
struct LieAlgebraSpec {
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Rational> c;  // dense, size dim^3, layout (i*dim + j)*dim + k

  const Rational& coeff(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }
  Rational& coeff(int i, int j, int k) { return c[(i * dim + j) * dim + k]; }
};

/// Three-dimensional algebra with [X1,X2]=X3, [X2,X3]=X1, [X3,X1]=X2.
LieAlgebraSpec builtin_su2();

/// Eight-dimensional algebra on the basis {X1..X8} with X7 = -[X1,X2] and
/// X8 = -[X3,X4]; integer bracket table.
LieAlgebraSpec builtin_su3();

/// Exact bilinear bracket of coefficient vectors (length dim each).
std::vector<Rational> bracket(const LieAlgebraSpec& A, const std::vector<Rational>& u,
                              const std::vector<Rational>& v);

/// Empty string when antisymmetry and the Jacobi identity hold exactly;
/// otherwise a description of the first violation found.
std::string validation_failure(const LieAlgebraSpec& A);

/// Throws ValidationError with the first violation.
void validate(const LieAlgebraSpec& A);

/// Parse the JSON algebra document (fields: dim, basis, brackets as records
/// {i, j, k, c} with 1-based indices and exact rational strings; unlisted
/// triples are zero).  Runs validate().
LieAlgebraSpec parse_algebra(const std::string& json_text);

/// Inverse of parse_algebra (canonical key order, all nonzero triples listed).
std::string serialize_algebra(const LieAlgebraSpec& A);

/// Bracket-generation flag of a generating set.
struct HoermanderFlag {
  std::vector<int> generator_indices;  // 1-based, as supplied
  std::vector<int> dims;               // dim H^1, ..., dim H^kappa (strictly increasing)
  int kappa = 0;
  int hausdorff_Q = 0;
};

/// Grows the filtration H^1 c H^2 c ... by exact rational rank computations:
/// stage omega+1 adds brackets of accumulated independent representatives
/// whose degrees sum to omega+1 (covers every nested commutator of length
/// omega+1).  Throws NotHoermander if the span stabilizes below dim.
HoermanderFlag hoermander_flag(const LieAlgebraSpec& A, const std::vector<int>& generators_1based);

/// Q = dim H^1 + sum_{i>=1} (i+1) (dim H^{i+1} - dim H^i), exactly.
int hausdorff_dimension(const HoermanderFlag& f);

} // namespace glpq
