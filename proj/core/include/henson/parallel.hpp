#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace henson {

// Worker count from HENSON_WORKERS, else the hardware concurrency (at
// least 1).
std::size_t worker_count();

// Calls task(i) for i in [0, count) on up to worker_count() threads.
// Exceptions are rethrown on the caller's thread (the one with the lowest
// index wins), so results stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

// results[i] = task(i).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& task) {
  std::vector<T> results(count);
  parallel_for(count, [&](std::size_t i) { results[i] = task(i); });
  return results;
}

}  // namespace henson
