#pragma once

#include <cstddef>
#include <vector>

namespace focusopt::par {

/// Worker cap: min(FOCUSOPT_THREADS, hardware threads), at least 1.
/// Read once at first use.
int max_workers();

/// Parallel loop over [0, n).  Bodies must write disjoint state; the
/// iteration-to-thread assignment never influences results.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body);

/// Serial pairwise (cascade) summation.
template <class T>
T pairwise_sum(const T* v, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T acc = v[0];
    for (std::size_t i = 1; i < n; ++i) acc = acc + v[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

inline constexpr std::size_t kReductionBlock = 2048;

/// Blocked pairwise summation.  The block structure is fixed, so the
/// result is bit-identical for any worker count (and equal to the
/// single-threaded evaluation of the same blocks).
template <class T>
T block_pairwise_sum(const T* v, std::size_t n);

}  // namespace focusopt::par

#ifdef _OPENMP
#include <omp.h>
#endif

namespace focusopt::par {

template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
#ifdef _OPENMP
  const int nw = max_workers();
#pragma omp parallel for schedule(static) num_threads(nw)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
#endif
}

template <class T>
T block_pairwise_sum(const T* v, std::size_t n) {
  if (n <= kReductionBlock) return pairwise_sum(v, n);
  const std::size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<T> partial(nblocks);
  parallel_for(static_cast<std::ptrdiff_t>(nblocks), [&](std::size_t b) {
    const std::size_t lo = b * kReductionBlock;
    const std::size_t len = (lo + kReductionBlock <= n) ? kReductionBlock : n - lo;
    partial[b] = pairwise_sum(v + lo, len);
  });
  return pairwise_sum(partial.data(), nblocks);
}

}  // namespace focusopt::par
