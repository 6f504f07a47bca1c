#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace specmeter {

// Run fn(i) for i in [0, n) on up to `threads` workers. Each index is
// processed exactly once and writes only to its own slot, so results do not
// depend on the schedule.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = threads;
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, n] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Default worker count: the SPECMETER_THREADS environment variable, else 1.
unsigned default_thread_count();

}  // namespace specmeter
