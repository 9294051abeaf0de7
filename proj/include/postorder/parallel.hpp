#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace postorder {

/// Runs fn(i) for i in [0, count) on up to `threads` workers with a static
/// strided split. Results must be written to per-index slots so that the
/// outcome is independent of scheduling. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const auto workers = static_cast<std::size_t>(threads) < count ? static_cast<std::size_t>(threads) : count;
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Worker cap from POSTORDER_THREADS; 1 when unset or malformed.
inline int threads_from_env() {
  const char* v = std::getenv("POSTORDER_THREADS");
  if (v == nullptr) return 1;
  try {
    int n = std::stoi(v);
    return n >= 1 ? n : 1;
  } catch (...) {
    return 1;
  }
}

}  // namespace postorder
