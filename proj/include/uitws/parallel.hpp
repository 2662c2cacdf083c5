#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace uitws {

/// Runs fn(job) for job in [0, n_jobs) on up to `workers` threads. Jobs
/// must write results only to their own slots. The first exception thrown
/// by any job is rethrown after all threads join.
inline void parallel_for(int n_jobs, int workers, const std::function<void(int)>& fn) {
  if (n_jobs <= 0) return;
  if (workers <= 1 || n_jobs == 1) {
    for (int j = 0; j < n_jobs; ++j) fn(j);
    return;
  }
  int n_threads = std::min(workers, n_jobs);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto body = [&] {
    while (true) {
      int j = next.fetch_add(1);
      if (j >= n_jobs || failed.load()) return;
      try {
        fn(j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(body);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace uitws
