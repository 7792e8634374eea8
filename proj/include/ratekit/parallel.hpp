#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace ratekit {

// Worker count: RATEKIT_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("RATEKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates fn(i) for i in [0, count) on up to worker_count() threads and returns
// the results in index order. The first exception thrown by any task is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  static_assert(!std::is_same_v<Result, bool>, "vector<bool> is not safe for concurrent writes");
  std::vector<Result> out(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ratekit
