#pragma once

// Data-parallel kernels used throughout the library. Every kernel has an
// OpenMP path and a plain serial loop; the serial loop is the reference the
// tests compare against. Reductions are either exact (max/min) or performed
// serially over a per-index buffer, so both paths are bitwise identical.

#include <cstddef>
#include <limits>
#include <vector>

namespace thinseq {

enum class Exec { serial, openmp };

inline constexpr Exec kDefaultExec = Exec::openmp;

/// out[i] = f(i) for i in [0, n).
template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& f, Exec exec = kDefaultExec) {
  std::vector<T> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

/// max_i f(i); -inf for n == 0. NaN values are ignored.
template <class F>
double max_over(std::size_t n, F&& f, Exec exec = kDefaultExec) {
  double best = -std::numeric_limits<double>::infinity();
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const double v = f(static_cast<std::size_t>(i));
      if (v > best) best = v;
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const double v = f(static_cast<std::size_t>(i));
      if (v > best) best = v;
    }
  }
  return best;
}

/// Sum of f(i) in index order. The terms are produced in parallel and summed
/// serially so the result does not depend on the thread count.
template <class F>
double ordered_sum(std::size_t n, F&& f, Exec exec = kDefaultExec) {
  const auto terms = map_indices<double>(n, f, exec);
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

}  // namespace thinseq
