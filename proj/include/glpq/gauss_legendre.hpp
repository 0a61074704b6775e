#pragma once

#include <vector>

namespace glpq {

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1], exact for
/// polynomials of degree <= 2n - 1.  Newton iteration on the Legendre
/// three-term recurrence; nodes converge to machine precision.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace glpq
