#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rggent {

// Runs fn(task_index) for task_index in [0, n_tasks) on `workers` threads.
// Tasks must write results into slots indexed by task_index; callers reduce
// in index order afterwards, so results do not depend on the worker count.
inline void parallel_for_indexed(std::uint64_t n_tasks, int workers,
                                 const std::function<void(std::uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  if (workers == 1 || n_tasks <= 1) {
    for (std::uint64_t i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= n_tasks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n_threads = static_cast<int>(std::min<std::uint64_t>(n_tasks, static_cast<std::uint64_t>(workers)));
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Splits `total` items into a fixed number of chunks (independent of the
// worker count) so floating-point reductions have a stable shape.
struct ChunkPlan {
  std::uint64_t n_chunks;
  std::uint64_t base;   // items per chunk
  std::uint64_t extra;  // first `extra` chunks get one more item

  std::uint64_t offset(std::uint64_t c) const {
    return c * base + std::min(c, extra);
  }
  std::uint64_t size(std::uint64_t c) const { return base + (c < extra ? 1 : 0); }
};

inline ChunkPlan plan_chunks(std::uint64_t total, std::uint64_t max_chunks = 256) {
  ChunkPlan p{};
  p.n_chunks = std::min<std::uint64_t>(std::max<std::uint64_t>(total, 1), max_chunks);
  if (total == 0) p.n_chunks = 1;
  p.base = total / p.n_chunks;
  p.extra = total % p.n_chunks;
  return p;
}

}  // namespace rggent
