#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "glap/types.hpp"

namespace glap {

/// Worker count for parallel kernels, read from GLAP_NUM_THREADS (default 1).
int num_threads();

/// Runs f(i) for i in [0, count). Iterations are split into contiguous chunks,
/// one per worker; f must be safe to call concurrently for distinct i.
template <class F>
void parallel_for(index_t count, F&& f) {
  const index_t workers = std::min<index_t>(num_threads(), count);
  if (workers <= 1) {
    for (index_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (index_t w = 0; w < workers; ++w) {
    const index_t begin = count * w / workers;
    const index_t end = count * (w + 1) / workers;
    pool.emplace_back([&f, begin, end] {
      for (index_t i = begin; i < end; ++i) f(i);
    });
  }
}

}  // namespace glap
