#pragma once

// Minimal deterministic work partitioning. Ranges split into contiguous
// chunks, one thread per chunk, and per-chunk results merge in index order,
// so the thread count never changes any observable output.

#include <algorithm>
#include <thread>
#include <vector>

namespace qrank {

inline unsigned& worker_threads() {
  static unsigned n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// fn(chunk_lo, chunk_hi) -> R over [lo, hi) split into at most worker_threads()
// chunks; results returned in chunk order.
template <class R, class Fn>
std::vector<R> parallel_chunk_map(long lo, long hi, Fn fn) {
  const long range = hi - lo;
  if (range <= 0) return {};
  const long chunks = std::min<long>(worker_threads(), range);
  std::vector<R> results(static_cast<std::size_t>(chunks));
  if (chunks == 1) {
    results[0] = fn(lo, hi);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (long c = 0; c < chunks; ++c) {
    const long a = lo + range * c / chunks;
    const long b = lo + range * (c + 1) / chunks;
    pool.emplace_back([&results, fn, a, b, c] { results[static_cast<std::size_t>(c)] = fn(a, b); });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace qrank
