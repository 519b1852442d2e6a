// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ft422 {

// Runs fn(0..n-1) on a small worker pool. Callers store results by index, so
// output order never depends on scheduling; work items must be independent.
// The first exception thrown by any item is rethrown after the pool drains.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(n, hw == 0 ? 1 : hw));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        if (failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ft422
