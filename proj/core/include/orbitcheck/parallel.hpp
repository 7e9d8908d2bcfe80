#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace orbitcheck {

/// Default worker count: ORBITCHECK_THREADS env var if set, else hardware
/// concurrency, clamped to [1, 64].
inline int default_thread_count() {
  if (const char* env = std::getenv("ORBITCHECK_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n > 64 ? 64 : n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  if (hw > 64) hw = 64;
  return static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n). Each invocation must only write state owned by
/// index i (e.g. a preallocated result slot); aggregation then happens in
/// index order on the caller side, so results do not depend on the thread
/// count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int threads = 0) {
  if (threads <= 0) threads = default_thread_count();
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = n * w / workers;
      std::size_t hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace orbitcheck
