#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rwl {

// Runs fn(i) for i in [begin, end) on `workers` threads, interleaved so that
// expensive high indices are spread across workers.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || end - begin < 2) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&fn, begin, end, t, workers] {
      for (std::size_t i = begin + t; i < end; i += workers) fn(i);
    });
  }
}

// RWL_THREADS if set to a positive integer, otherwise hardware concurrency.
unsigned default_thread_count();

}  // namespace rwl
