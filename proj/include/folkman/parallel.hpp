#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace folkman {

/// Runs fn(i, worker) for i in [0, count) on `workers` threads. Work is
/// handed out dynamically; the first exception is rethrown after joining.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Smallest i in [0, count) with pred(i), evaluated in parallel batches.
/// Returns count if none.
template <class Pred>
std::size_t parallel_first(std::size_t count, int workers, Pred&& pred) {
  workers = std::max(1, workers);
  for (std::size_t base = 0; base < count; base += static_cast<std::size_t>(workers)) {
    std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(workers), count - base);
    std::vector<char> hit(batch, 0);
    parallel_for(batch, workers, [&](std::size_t i, int) { hit[i] = pred(base + i) ? 1 : 0; });
    for (std::size_t i = 0; i < batch; ++i)
      if (hit[i]) return base + i;
  }
  return count;
}

}  // namespace folkman
