#pragma once

#include "glpq/euler.hpp"

#include <cstddef>
#include <vector>

namespace glpq {

/// Product quadrature on the group in Euler angles, normalized so the weights
/// sum to exactly 1 (probability Haar measure).
///
/// For band limit parameter `two_band_limit` = 2L the rule integrates exactly
/// every product of two matrix coefficients of degree <= L: uniform angles in
/// alpha and gamma (2*2L+1 points each over [0, 4*pi)) and Gauss-Legendre in
/// cos(beta) (2L+1 points).  Node storage order: beta outermost, then alpha,
/// then gamma.
struct QuadratureGrid {
  int two_band_limit = 0;
  std::vector<EulerAngles> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

QuadratureGrid build_grid(int two_band_limit);

/// Weighted sum of samples against the grid weights (plain left-to-right
/// accumulation; the node order is part of the determinism contract).
c64 integrate(const QuadratureGrid& grid, const std::vector<c64>& samples);

} // namespace glpq
