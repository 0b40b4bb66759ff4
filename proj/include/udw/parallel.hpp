#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

// Deterministic fork-join helper for embarrassingly parallel loops.  Work is
// split into contiguous index blocks, so results written to slot i are
// independent of the worker count.

namespace udw {

// Worker count: the UDW_THREADS environment variable when set (clamped to
// [1, 256]), otherwise the hardware concurrency (clamped to 32).
inline unsigned worker_count() {
  if (const char* env = std::getenv("UDW_THREADS")) {
    try {
      const long n = std::stol(env);
      return static_cast<unsigned>(std::clamp(n, 1L, 256L));
    } catch (const std::exception&) {
      // fall through to the hardware default on unparsable values
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : std::min(hc, 32u);
}

// Runs body(i) for i in [0, n).  The body must confine its writes to
// per-index slots.  The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& body, unsigned workers = 0) {
  if (n == 0) return;
  if (workers == 0) workers = worker_count();
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto run_block = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) body(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back(run_block, begin, end);
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace udw
