#include "glpq/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glpq::par {

static int detect_max_threads() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("GLPQ_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
      if (cap >= 1 && n < 1) n = cap;
    } catch (...) {
      // ignore malformed values, keep runtime default
    }
  }
  return n < 1 ? 1 : n;
}

int max_threads() {
  static const int cached = detect_max_threads();
  return cached;
}

namespace detail {

void run_wave(std::size_t lo, std::size_t hi, bool parallel,
              void (*fn)(std::size_t, void*), void* ctx) {
  if (parallel && max_threads() > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long long b = static_cast<long long>(lo); b < static_cast<long long>(hi); ++b)
      fn(static_cast<std::size_t>(b), ctx);
    return;
#endif
  }
  for (std::size_t b = lo; b < hi; ++b) fn(b, ctx);
}

} // namespace detail

void independent_for(std::size_t n, bool parallel, void (*fn)(std::size_t, void*), void* ctx) {
  if (parallel && max_threads() > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i), ctx);
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) fn(i, ctx);
}

} // namespace glpq::par
