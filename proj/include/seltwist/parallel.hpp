#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seltwist {

// Worker count for the data-parallel kernels.  SELMER_TWIST_WORKERS overrides
// whatever OpenMP would pick; results are identical for any count.
inline int worker_count() {
  if (const char* env = std::getenv("SELMER_TWIST_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Splits [lo, hi) into `workers` contiguous chunks and runs
// body(worker_index, chunk_lo, chunk_hi) on each.  Chunk boundaries depend
// only on (lo, hi, workers), so callers can merge per-worker output in index
// order and get a deterministic result.
template <class F>
void parallel_for_chunks(long long lo, long long hi, int workers, F&& body) {
  if (hi <= lo) return;
  long long n = hi - lo;
  if (workers < 1) workers = 1;
  if (static_cast<long long>(workers) > n) workers = static_cast<int>(n);
  auto chunk_bounds = [&](int w) {
    long long begin = lo + n * w / workers;
    long long end = lo + n * (w + 1) / workers;
    return std::pair<long long, long long>(begin, end);
  };
#ifdef _OPENMP
#pragma omp parallel for num_threads(workers) schedule(static, 1)
  for (int w = 0; w < workers; ++w) {
    auto [b, e] = chunk_bounds(w);
    body(w, b, e);
  }
#else
  for (int w = 0; w < workers; ++w) {
    auto [b, e] = chunk_bounds(w);
    body(w, b, e);
  }
#endif
}

}  // namespace seltwist
