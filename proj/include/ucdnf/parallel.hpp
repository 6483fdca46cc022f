// Deterministic parallel-for: work items write to preallocated slots indexed by
// item, aggregation happens sequentially afterwards, so the observable result is
// independent of the thread count.
#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ucdnf {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("UCDNF_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

template <typename Fn>
inline void parallel_for(std::int64_t count, int threads, Fn&& fn) {
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  int nworkers = static_cast<int>(std::min<std::int64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (int w = 0; w < nworkers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ucdnf
