#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace s2g {

/// Number of workers for jobs = 0 (all logical cores).
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// results[i] = fn(i) for i < count, computed by up to `jobs` threads. Output
/// order never depends on scheduling. The first exception thrown by fn is
/// rethrown after all workers stop.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<Result> results(count);
  const unsigned workers = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace s2g
