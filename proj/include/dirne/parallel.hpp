#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dirne {

// Worker count: hardware concurrency, capped by DIRNE_THREADS when set.
inline int max_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("DIRNE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
}

// Splits [0, n) into contiguous chunks, runs fn(chunk_index, begin, end) on a
// small thread pool. Chunking is deterministic; callers combine per-chunk
// results in chunk order to keep reductions scheduling-independent.
template <typename Fn>
void parallel_chunks(std::size_t n, int n_chunks, Fn&& fn) {
  if (n == 0) return;
  const int workers = max_threads();
  if (n_chunks <= 0) n_chunks = 1;
  const std::size_t chunk = (n + n_chunks - 1) / n_chunks;
  if (workers == 1 || n_chunks == 1) {
    for (int c = 0; c < n_chunks; ++c) {
      const std::size_t b = c * chunk;
      if (b >= n) break;
      fn(c, b, std::min(n, b + chunk));
    }
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const int c = next.fetch_add(1);
        if (c >= n_chunks) return;
        const std::size_t b = static_cast<std::size_t>(c) * chunk;
        if (b >= n) continue;
        fn(c, b, std::min(n, b + chunk));
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace dirne
