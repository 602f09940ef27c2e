#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ugt {

inline unsigned worker_count() {
  if (const char* env = std::getenv("UGT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Static block partition over [0,n); results must be written to per-index
// slots so the merge order is deterministic regardless of thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ugt
