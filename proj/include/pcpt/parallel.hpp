#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace pcpt {

/// Runs fn(j) for every j in [0, count) on up to `workers` threads. Every
/// index is visited even if some throw; afterwards the exception from the
/// lowest failing index is rethrown, so the outcome does not depend on the
/// worker count or scheduling.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));

  std::mutex mu;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto run_one = [&](std::size_t j) {
    try {
      fn(j);
    } catch (...) {
      std::lock_guard lock(mu);
      if (j < failed_at) {
        failed_at = j;
        failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    for (std::size_t j = 0; j < count; ++j) run_one(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < count; j = next++) run_one(j);
      });
    }
  }

  if (failure) std::rethrow_exception(failure);
}

}  // namespace pcpt
