#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace linset {

/// Splits [0, total) into `workers` contiguous ranges and calls
/// fn(begin, end, worker_index) on each, one thread per range. Callers merge
/// per-worker results themselves, in worker order, so output never depends on
/// scheduling. workers <= 1 runs inline.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2 * workers) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(total, w * chunk);
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&, lo, hi, w] {
      try {
        fn(lo, hi, w);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace linset
