#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace latint {

/// Runs body(t) for every t in [0, count) on up to `threads` workers, handing
/// out indices one at a time. The first exception thrown by a worker is
/// rethrown after all workers have stopped.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t t = next++; t < count && !failed; t = next++) {
      try {
        body(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

/// Number of hardware threads, at least one.
inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace latint
