#ifndef RECONKIT_PARALLEL_HPP
#define RECONKIT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reconkit {

/// Worker threads to use: RECONKIT_THREADS when it holds a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Iterations are striped across workers; callers write results
/// into per-index slots so the merged output does not depend on scheduling. The first exception
/// thrown by any iteration is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) {
          {
            std::lock_guard lock(failure_mutex);
            if (failure) {
              return;
            }
          }
          body(i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace reconkit

#endif  // RECONKIT_PARALLEL_HPP
