#ifndef QSL2Q_PARALLEL_HPP
#define QSL2Q_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qsl2q {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Maps fn over sample indices 0..n-1 on `workers` threads into a
/// preallocated slot per index, so the result is independent of the worker
/// count and scheduling. `progress`, when set, is called with the number of
/// finished samples every `progress_stride` completions.
template <typename R>
std::vector<R> parallel_map(std::uint64_t n, int workers,
                            const std::function<R(std::uint64_t)>& fn,
                            const std::function<void(std::uint64_t)>& progress = {},
                            std::uint64_t progress_stride = 10000) {
  std::vector<R> results(n);
  const int w = resolve_workers(workers);
  if (w == 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) {
      results[i] = fn(i);
      if (progress && (i + 1) % progress_stride == 0) progress(i + 1);
    }
    return results;
  }

  std::atomic<std::uint64_t> done{0};
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (int t = 0; t < w; ++t) {
    const std::uint64_t lo = n * t / w;
    const std::uint64_t hi = n * (t + 1) / w;
    pool.emplace_back([&, lo, hi]() {
      for (std::uint64_t i = lo; i < hi; ++i) {
        results[i] = fn(i);
        const std::uint64_t d = done.fetch_add(1) + 1;
        if (progress && d % progress_stride == 0) progress(d);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace qsl2q

#endif  // QSL2Q_PARALLEL_HPP
