#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rssikit {

// Execution policy for the batch kernels. Every kernel that accepts an Exec
// produces bit-identical results under both policies: work is split into
// fixed units (traces, chunks, grid points) that write to pre-sized slots,
// and any reduction over the slots happens serially in index order.
enum class Exec { serial, openmp };

// Runs body(i) for i in [0, n). Under Exec::openmp the iterations run
// concurrently; body must only touch per-index state and must not throw.
template <typename F>
void for_index(std::int64_t n, Exec exec, F&& body) {
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rssikit
