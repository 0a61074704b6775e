#include "glpq/fourier.hpp"

#include "glpq/errors.hpp"
#include "glpq/parallel.hpp"
#include "glpq/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace glpq {

FourierCoefficients zero_coefficients(int two_band) {
  if (two_band < 0) throw ValidationError("zero_coefficients: band must be >= 0");
  FourierCoefficients f;
  f.two_band = two_band;
  f.hat.resize(two_band + 1);
  for (int two_l = 0; two_l <= two_band; ++two_l)
    f.hat[two_l] = Eigen::MatrixXcd::Zero(two_l + 1, two_l + 1);
  return f;
}

namespace {

// hat contribution of grid nodes [lo, hi): partial(l) = sum w_k f_k D^l(x_k)^H
void forward_block(const QuadratureGrid& grid, const std::vector<c64>& samples, int two_band,
                   std::size_t lo, std::size_t hi, std::vector<Eigen::MatrixXcd>& partial) {
  for (int two_l = 0; two_l <= two_band; ++two_l) {
    if (partial[two_l].rows() != two_l + 1) partial[two_l].resize(two_l + 1, two_l + 1);
    partial[two_l].setZero();
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const std::vector<Eigen::MatrixXcd> D = wigner_D_tower(two_band, grid.nodes[k]);
    const c64 wf = grid.weights[k] * samples[k];
    for (int two_l = 0; two_l <= two_band; ++two_l) {
      const int dim = two_l + 1;
      const Eigen::MatrixXcd& Dl = D[two_l];
      Eigen::MatrixXcd& out = partial[two_l];
      for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) out(i, j) += wf * std::conj(Dl(j, i));
    }
  }
}

c64 synthesis_value(const std::vector<Eigen::MatrixXcd>& D, const FourierCoefficients& f) {
  c64 acc{0.0, 0.0};
  for (int two_l = 0; two_l <= f.two_band; ++two_l) {
    const int dim = two_l + 1;
    const Eigen::MatrixXcd& Dl = D[two_l];
    const Eigen::MatrixXcd& Fl = f.hat[two_l];
    c64 tr{0.0, 0.0};
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) tr += Dl(i, j) * Fl(j, i);
    acc += static_cast<double>(dim) * tr;
  }
  return acc;
}

} // namespace

FourierCoefficients forward(const QuadratureGrid& grid, const std::vector<c64>& samples,
                            int two_band, bool parallel) {
  if (samples.size() != grid.size())
    throw ValidationError("forward: sample count does not match grid size");
  FourierCoefficients acc = zero_coefficients(two_band);
  const std::size_t nblocks = par::block_count(grid.size());
  std::vector<std::vector<Eigen::MatrixXcd>> scratch(
      std::min<std::size_t>(std::max(par::max_threads(), 1), std::max<std::size_t>(nblocks, 1)));
  par::blocked_reduce(
      nblocks, parallel, scratch,
      [&](std::size_t b, std::vector<Eigen::MatrixXcd>& partial) {
        if (partial.empty()) partial.resize(two_band + 1);
        auto [lo, hi] = par::block_range(b, grid.size());
        forward_block(grid, samples, two_band, lo, hi, partial);
      },
      [&](std::size_t, const std::vector<Eigen::MatrixXcd>& partial) {
        for (int two_l = 0; two_l <= two_band; ++two_l) acc.hat[two_l] += partial[two_l];
      });
  return acc;
}

std::vector<c64> inverse(const QuadratureGrid& grid, const FourierCoefficients& f,
                         bool parallel) {
  std::vector<c64> out(grid.size());
  par::for_each_index(grid.size(), parallel, [&](std::size_t k) {
    out[k] = synthesis_value(wigner_D_tower(f.two_band, grid.nodes[k]), f);
  });
  return out;
}

std::vector<c64> evaluate(const FourierCoefficients& f, const std::vector<EulerAngles>& points,
                          bool parallel) {
  std::vector<c64> out(points.size());
  par::for_each_index(points.size(), parallel, [&](std::size_t k) {
    out[k] = synthesis_value(wigner_D_tower(f.two_band, points[k]), f);
  });
  return out;
}

double plancherel_norm(const FourierCoefficients& f) {
  double acc = 0.0;
  for (int two_l = 0; two_l <= f.two_band; ++two_l)
    acc += (two_l + 1) * f.hat[two_l].squaredNorm();
  return std::sqrt(acc);
}

namespace {

// Gram matrix of all matrix coefficients through two_L, lower triangle.
// Column f of the basis vector: shell offsets, then row-major (i, j).
void gram_block(const QuadratureGrid& grid, int two_L, const std::vector<int>& offset,
                std::size_t lo, std::size_t hi, Eigen::MatrixXcd& partial) {
  const int F = offset.back();
  if (partial.rows() != F) partial.resize(F, F);
  partial.setZero();
  Eigen::VectorXcd v(F);
  for (std::size_t k = lo; k < hi; ++k) {
    const std::vector<Eigen::MatrixXcd> D = wigner_D_tower(two_L, grid.nodes[k]);
    for (int two_l = 0; two_l <= two_L; ++two_l) {
      const int dim = two_l + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) v[offset[two_l] + i * dim + j] = D[two_l](i, j);
    }
    const double w = grid.weights[k];
    for (int j = 0; j < F; ++j) {
      const c64 coef = w * std::conj(v[j]);
      partial.col(j).tail(F - j) += coef * v.tail(F - j);
    }
  }
}

double gram_residual(const Eigen::MatrixXcd& G, int two_L, const std::vector<int>& offset) {
  const int F = offset.back();
  // shell label per basis index
  std::vector<int> shell(F);
  for (int two_l = 0; two_l <= two_L; ++two_l)
    for (int t = offset[two_l]; t < offset[two_l + 1]; ++t) shell[t] = two_l;
  double worst = 0.0;
  for (int j = 0; j < F; ++j) {
    for (int i = j; i < F; ++i) {
      const double expect = (i == j) ? 1.0 / (shell[i] + 1) : 0.0;
      worst = std::max(worst, std::abs(G(i, j) - expect));
    }
  }
  return worst;
}

double schur_residual_impl(int two_L, bool parallel) {
  const QuadratureGrid grid = build_grid(two_L);
  std::vector<int> offset(two_L + 2, 0);
  for (int two_l = 0; two_l <= two_L; ++two_l)
    offset[two_l + 1] = offset[two_l] + (two_l + 1) * (two_l + 1);
  const int F = offset.back();
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(F, F);
  const std::size_t nblocks = par::block_count(grid.size());
  std::vector<Eigen::MatrixXcd> scratch(
      std::min<std::size_t>(std::max(par::max_threads(), 1), std::max<std::size_t>(nblocks, 1)));
  par::blocked_reduce(
      nblocks, parallel, scratch,
      [&](std::size_t b, Eigen::MatrixXcd& partial) {
        auto [lo, hi] = par::block_range(b, grid.size());
        gram_block(grid, two_L, offset, lo, hi, partial);
      },
      [&](std::size_t, const Eigen::MatrixXcd& partial) { G += partial; });
  return gram_residual(G, two_L, offset);
}

} // namespace

double schur_orthogonality_residual(int two_L, bool parallel) {
  return schur_residual_impl(two_L, parallel);
}

namespace serial {

FourierCoefficients forward(const QuadratureGrid& grid, const std::vector<c64>& samples,
                            int two_band) {
  if (samples.size() != grid.size())
    throw ValidationError("forward: sample count does not match grid size");
  FourierCoefficients acc = zero_coefficients(two_band);
  std::vector<Eigen::MatrixXcd> partial(two_band + 1);
  for (std::size_t b = 0; b < par::block_count(grid.size()); ++b) {
    auto [lo, hi] = par::block_range(b, grid.size());
    forward_block(grid, samples, two_band, lo, hi, partial);
    for (int two_l = 0; two_l <= two_band; ++two_l) acc.hat[two_l] += partial[two_l];
  }
  return acc;
}

std::vector<c64> inverse(const QuadratureGrid& grid, const FourierCoefficients& f) {
  std::vector<c64> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    out[k] = synthesis_value(wigner_D_tower(f.two_band, grid.nodes[k]), f);
  return out;
}

double schur_orthogonality_residual(int two_L) { return schur_residual_impl(two_L, false); }

} // namespace serial

} // namespace glpq
