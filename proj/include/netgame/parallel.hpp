#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace netgame {

/// Resolves a requested worker count; 0 means one per hardware thread.
inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(worker, begin, end) over contiguous chunks of [0, count).
/// Chunks are handed out dynamically; callers that need deterministic output
/// must write results by index rather than in completion order.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body, std::size_t chunk = 64) {
  threads = std::min(resolve_threads(threads), std::max<std::size_t>(1, count));
  if (threads <= 1) {
    if (count > 0) body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::mutex lock;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&](std::size_t id) {
    for (;;) {
      std::size_t begin;
      {
        std::lock_guard guard(lock);
        if (next >= count || failure) return;
        begin = next;
        next = std::min(count, next + chunk);
      }
      try {
        body(id, begin, std::min(count, begin + chunk));
      } catch (...) {
        std::lock_guard guard(lock);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace netgame
