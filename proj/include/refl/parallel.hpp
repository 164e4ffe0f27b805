#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace refl {

/// Runs fn(0..n-1), fanning out over `threads` workers when threads > 1.
/// Work items must be independent; results are expected to land in
/// preallocated per-index slots so the merge order stays canonical.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_err = nullptr;
  std::mutex err_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_err) first_err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned k = std::min<unsigned>(threads, static_cast<unsigned>(n));
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_err) std::rethrow_exception(first_err);
}

}  // namespace refl
