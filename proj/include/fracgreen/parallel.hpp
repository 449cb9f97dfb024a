#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace fracgreen {

/// Index-parallel map with static chunking; callers gather per-index results
/// and reduce in index order, so the outcome is independent of jobs.
inline void parallel_for(long n, int jobs,
                         const std::function<void(long)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min<long>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (long i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fracgreen
