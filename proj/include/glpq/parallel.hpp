#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace glpq::par {

/// Number of worker threads the blocked kernels may use.  Respects the
/// GLPQ_THREADS environment variable (read once) and the OpenMP runtime.
/// Always >= 1; equals 1 when built without OpenMP.
int max_threads();

/// Fixed block length used to partition index ranges for parallel reduction.
/// The partition depends only on the problem size, never on the thread count,
/// so reduction results are byte-identical for any number of threads.
inline constexpr std::size_t kBlock = 64;

/// Number of kBlock-sized blocks covering [0, n).
inline std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

/// Half-open index range of block b.
inline std::pair<std::size_t, std::size_t> block_range(std::size_t b, std::size_t n) {
  std::size_t lo = b * kBlock;
  std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
  return {lo, hi};
}

namespace detail {
void run_wave(std::size_t lo, std::size_t hi, bool parallel,
              void (*fn)(std::size_t, void*), void* ctx);
}

/// Deterministic blocked reduction.
///
/// `body(b, partial)` must fully overwrite `partial` with block b's
/// contribution; `merge(b, partial)` folds it into the caller's accumulator.
/// Blocks are evaluated in waves (possibly in parallel) but always merged in
/// ascending block order, so the result is bitwise independent of the thread
/// count.  `serial == true` runs everything on the calling thread with the
/// identical block structure and merge order.
template <class Partial, class Body, class Merge>
void blocked_reduce(std::size_t nblocks, bool parallel, std::vector<Partial>& scratch,
                    Body&& body, Merge&& merge) {
  if (scratch.empty()) scratch.resize(1);
  const std::size_t wave = scratch.size();
  for (std::size_t w0 = 0; w0 < nblocks; w0 += wave) {
    const std::size_t w1 = w0 + wave < nblocks ? w0 + wave : nblocks;
    struct Ctx {
      std::vector<Partial>* scratch;
      Body* body;
      std::size_t w0;
    } ctx{&scratch, &body, w0};
    detail::run_wave(
        w0, w1, parallel,
        [](std::size_t b, void* p) {
          Ctx& c = *static_cast<Ctx*>(p);
          (*c.body)(b, (*c.scratch)[b - c.w0]);
        },
        &ctx);
    for (std::size_t b = w0; b < w1; ++b) merge(b, scratch[b - w0]);
  }
}

/// Parallel loop over independent outputs (no reduction): body(i) for
/// i in [0, n).  Safe only when iterations touch disjoint data.
void independent_for(std::size_t n, bool parallel, void (*fn)(std::size_t, void*), void* ctx);

template <class Body>
void for_each_index(std::size_t n, bool parallel, Body&& body) {
  independent_for(
      n, parallel,
      [](std::size_t i, void* p) { (*static_cast<Body*>(p))(i); }, &body);
}

} // namespace glpq::par
