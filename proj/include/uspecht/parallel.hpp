#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace uspecht {

/// Runs fn(0..count-1) on a bounded pool; callers store results by index so
/// reductions stay order-fixed regardless of the worker count.
template <class F>
void parallel_for(size_t count, int workers, F&& fn) {
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  size_t w = std::min(static_cast<size_t>(workers), count);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace uspecht
