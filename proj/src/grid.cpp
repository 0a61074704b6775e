#include "glpq/grid.hpp"

#include "glpq/errors.hpp"
#include "glpq/gauss_legendre.hpp"

#include <cmath>

namespace glpq {

QuadratureGrid build_grid(int two_band_limit) {
  if (two_band_limit < 0) throw ValidationError("build_grid: band limit must be >= 0");
  const int two_L = two_band_limit;
  const int n_ab = 2 * two_L + 1;  // uniform points in alpha and in gamma
  const int n_beta = two_L + 1;

  std::vector<double> xb, wb;
  gauss_legendre(n_beta, xb, wb);

  QuadratureGrid grid;
  grid.two_band_limit = two_L;
  grid.nodes.reserve(static_cast<std::size_t>(n_beta) * n_ab * n_ab);
  grid.weights.reserve(grid.nodes.capacity());

  const double dphi = 4.0 * M_PI / n_ab;
  for (int b = 0; b < n_beta; ++b) {
    const double beta = std::acos(xb[b]);
    // GL weight integrates (1/2) sin(beta) d beta; each uniform factor
    // contributes 1/n_ab of its normalized circle measure.
    const double w = 0.5 * wb[b] / (static_cast<double>(n_ab) * n_ab);
    for (int a = 0; a < n_ab; ++a) {
      const double alpha = a * dphi;
      for (int c = 0; c < n_ab; ++c) {
        grid.nodes.push_back({alpha, beta, c * dphi});
        grid.weights.push_back(w);
      }
    }
  }
  return grid;
}

c64 integrate(const QuadratureGrid& grid, const std::vector<c64>& samples) {
  if (samples.size() != grid.size())
    throw ValidationError("integrate: sample count does not match grid size");
  c64 acc{0.0, 0.0};
  for (std::size_t k = 0; k < samples.size(); ++k) acc += grid.weights[k] * samples[k];
  return acc;
}

} // namespace glpq
