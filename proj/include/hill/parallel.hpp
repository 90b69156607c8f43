#ifndef HILL_PARALLEL_HPP
#define HILL_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hill {

/// Thread cap from HILL_THREADS (0 or unset/invalid = auto).
inline unsigned thread_cap_from_env() {
  const char* s = std::getenv("HILL_THREADS");
  if (s == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 0) return 0;
  return static_cast<unsigned>(v);
}

/// Runs f(i) for i in [0, n) across worker threads; results must be written
/// into caller-owned slots by index so assembly stays deterministic.  The
/// first exception thrown by any worker is rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, F&& f, unsigned threads = 0) {
  if (threads == 0) threads = thread_cap_from_env();
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > n) threads = static_cast<unsigned>(n == 0 ? 1 : n);

  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }

  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < n; i += threads) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hill

#endif
