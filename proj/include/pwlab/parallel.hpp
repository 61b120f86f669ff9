#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pwlab {

/// Worker cap: PWLAB_THREADS when set, hardware concurrency otherwise.
inline int max_threads() {
  if (const char* env = std::getenv("PWLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

/// Index-parallel loop with deterministic work assignment (striped by index;
/// results must be written to per-index slots by the body).
inline void parallel_for(int n, const std::function<void(int)>& body) {
  int workers = std::min(max_threads(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace pwlab
