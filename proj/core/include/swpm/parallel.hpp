#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace swpm {

/// Runs body(j) for j in [begin, end), split into contiguous row blocks over
/// `workers` threads. Each row is processed by exactly one thread and the
/// per-row arithmetic does not depend on the split, so results are identical
/// for any worker count. The first exception thrown by a worker is rethrown.
template <class Body>
void parallel_rows(int workers, int begin, int end, Body&& body) {
  const int n = end - begin;
  if (n <= 0) return;
  workers = std::clamp(workers, 1, n);
  if (workers == 1) {
    for (int j = begin; j < end; ++j) body(j);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const int b = begin + static_cast<int>(static_cast<long long>(n) * w / workers);
      const int e = begin + static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      pool.emplace_back([&, b, e, w] {
        try {
          for (int j = b; j < e; ++j) body(j);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace swpm
