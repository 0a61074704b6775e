#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace glpq {

/// Deterministic random source.  Draws are hand-mapped from the raw 64-bit
/// stream (never through std:: distributions, whose output may differ across
/// standard library implementations), so seeded results are reproducible
/// byte-for-byte everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : m_eng(seed) {}

  std::uint64_t u64() { return m_eng(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(m_eng() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  /// Complex with independent uniform [-1, 1) parts.
  std::complex<double> complex_symmetric() {
    double re = uniform_symmetric();
    double im = uniform_symmetric();
    return {re, im};
  }

private:
  std::mt19937_64 m_eng;
};

} // namespace glpq
