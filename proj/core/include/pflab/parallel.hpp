#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace pflab {

inline int resolve_threads(int n_threads) {
  if (n_threads > 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunked parallel loop. Work is split into a fixed number of chunks that is
// independent of the thread count; threads pull chunk indices from a shared
// counter. Chunks must write to disjoint state, which keeps results
// bit-identical for any thread count.
inline void parallel_for_chunks(
    std::size_t n, int n_threads,
    const std::function<void(std::size_t begin, std::size_t end,
                             std::size_t chunk)>& body,
    std::size_t n_chunks = 64) {
  if (n == 0) return;
  if (n_chunks > n) n_chunks = n;
  const int threads = resolve_threads(n_threads);
  auto chunk_range = [&](std::size_t c) {
    const std::size_t b = n * c / n_chunks;
    const std::size_t e = n * (c + 1) / n_chunks;
    return std::pair<std::size_t, std::size_t>(b, e);
  };
  if (threads <= 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      auto [b, e] = chunk_range(c);
      body(b, e, c);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      auto [b, e] = chunk_range(c);
      body(b, e, c);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = std::min<std::size_t>(threads, n_chunks);
  pool.reserve(spawn);
  for (int i = 0; i < spawn - 1; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace pflab
