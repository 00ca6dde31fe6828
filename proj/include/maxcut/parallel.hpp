#ifndef MAXCUT_PARALLEL_HPP
#define MAXCUT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "maxcut/errors.hpp"

namespace maxcut {

/// Number of workers to use for `task_count` tasks: available hardware
/// parallelism capped by the task count, at least 1.
inline int default_worker_count(std::size_t task_count) {
  const unsigned hw = std::thread::hardware_concurrency();
  std::size_t w = hw == 0 ? 1 : hw;
  if (task_count > 0 && w > task_count) w = task_count;
  return static_cast<int>(w == 0 ? 1 : w);
}

/// Runs fn(i) for every i in [0, count) on up to `workers` threads and
/// returns the results ordered by index. Each result lands in its own slot,
/// so the output is independent of scheduling. If calls throw, the
/// exception observed at the smallest index is rethrown after the pool
/// drains (remaining tasks are skipped best-effort).
template <typename Fn>
auto run_indexed(std::size_t count, int workers, Fn&& fn) {
  using T = decltype(fn(std::size_t{0}));
  if (workers < 1) throw ParameterError("worker pool: size must be >= 1");

  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancel{false};
  std::mutex failure_mutex;
  std::size_t failure_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto drain = [&] {
    for (;;) {
      if (cancel.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
        cancel.store(true, std::memory_order_relaxed);
      }
    }
  };

  const std::size_t spawn = std::min<std::size_t>(workers, count);
  if (spawn <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
  }

  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace maxcut

#endif
