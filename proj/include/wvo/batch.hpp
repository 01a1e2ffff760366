#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <thread>
#include <vector>

namespace wvo {

/// Evaluates fn(0), ..., fn(count − 1) on up to `workers` threads and returns the
/// results in index order. An exception from any call is rethrown after all workers finish.
template <class Fn>
auto run_batch(std::size_t count, Fn fn, std::size_t workers = 0) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) slots[i].emplace(fn(i));
    }));
  std::exception_ptr first;
  for (auto& t : tasks) {
    try {
      t.get();
    } catch (...) {
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace wvo
