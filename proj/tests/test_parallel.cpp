#include <doctest.h>

#include "glpq/parallel.hpp"

#include <cmath>
#include <numeric>
#include <vector>

using namespace glpq;

namespace {

// Reference: plain left-to-right blocked sum with the library's partition.
double blocked_sum_reference(const std::vector<double>& data) {
  double total = 0.0;
  const std::size_t nblocks = par::block_count(data.size());
  for (std::size_t b = 0; b < nblocks; ++b) {
    const auto [lo, hi] = par::block_range(b, data.size());
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += data[i];
    total += partial;
  }
  return total;
}

double blocked_sum(const std::vector<double>& data, std::size_t scratch_width, bool parallel) {
  double total = 0.0;
  std::vector<double> scratch(scratch_width);
  par::blocked_reduce(
      par::block_count(data.size()), parallel, scratch,
      [&](std::size_t b, double& partial) {
        const auto [lo, hi] = par::block_range(b, data.size());
        partial = 0.0;
        for (std::size_t i = lo; i < hi; ++i) partial += data[i];
      },
      [&](std::size_t, double& partial) { total += partial; });
  return total;
}

} // namespace

TEST_CASE("block partition covers the range exactly once") {
  for (std::size_t n : {0ul, 1ul, 63ul, 64ul, 65ul, 1000ul}) {
    std::vector<int> hits(n, 0);
    for (std::size_t b = 0; b < par::block_count(n); ++b) {
      const auto [lo, hi] = par::block_range(b, n);
      CHECK(lo < hi);  // no empty blocks
      for (std::size_t i = lo; i < hi; ++i) hits[i] += 1;
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(hits[i] == 1);
  }
}

TEST_CASE("blocked_reduce is bitwise stable across scratch widths and modes") {
  // Values chosen so floating-point addition is order-sensitive: any change
  // in merge order would change the rounded sum.
  std::vector<double> data(10007);
  double x = 0.5;
  for (std::size_t i = 0; i < data.size(); ++i) {
    x = 4.0 * x * (1.0 - x);  // chaotic but deterministic
    data[i] = (x - 0.5) * std::pow(10.0, static_cast<double>(i % 13) - 6.0);
  }
  const double expect = blocked_sum_reference(data);
  for (std::size_t width : {1ul, 2ul, 3ul, 7ul, 64ul}) {
    CHECK(blocked_sum(data, width, false) == expect);
    CHECK(blocked_sum(data, width, true) == expect);
  }
}

TEST_CASE("for_each_index touches every index exactly once") {
  std::vector<int> hits(501, 0);
  par::for_each_index(hits.size(), true, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("max_threads is at least one") { CHECK(par::max_threads() >= 1); }
