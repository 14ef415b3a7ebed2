#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace steiner {

inline int default_workers() {
  if (const char* env = std::getenv("STEINER_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(lo, hi, worker) over contiguous chunks of [0, n).  The first
// exception thrown by a worker is rethrown after all workers join.
template <class Fn>
void parallel_chunks(std::uint64_t n, int workers, Fn&& fn) {
  if (n == 0) return;
  if (workers < 1) workers = 1;
  std::uint64_t nthreads = std::min<std::uint64_t>(workers, n);
  if (nthreads <= 1) {
    fn(std::uint64_t(0), n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::uint64_t chunk = (n + nthreads - 1) / nthreads;
  for (std::uint64_t w = 0; w < nthreads; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, &error, &error_mutex, lo, hi, w] {
      try {
        fn(lo, hi, static_cast<int>(w));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace steiner
