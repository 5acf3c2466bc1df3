#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cyclocover {

/// out[i] = f(items[i]); work is spread over `jobs` threads but the result
/// order is the input order. The first exception is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f, int jobs) {
  using R = decltype(f(items.front()));
  std::vector<R> result;
  result.reserve(items.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), items.size());
  if (workers <= 1) {
    for (const T& x : items) result.push_back(f(x));
    return result;
  }
  std::vector<std::optional<R>> out(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
          try {
            out[i] = f(items[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  for (auto& r : out) result.push_back(std::move(*r));
  return result;
}

}  // namespace cyclocover
