#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace primal {

// Worker count for partitionable scans: hardware concurrency, capped by the
// PRIMAL_MAX_WORKERS environment variable when set. Always at least 1.
int worker_count();

// Splits [0, total) into at most worker_count() contiguous chunks and runs
// fn(chunk_index, begin, end) on each, one thread per chunk. Callers keep one
// accumulator per chunk and merge them in chunk order, which makes results
// independent of the worker count and of scheduling.
template <typename Fn>
int parallel_chunks(std::uint64_t total, Fn&& fn) {
  int chunks = worker_count();
  if (static_cast<std::uint64_t>(chunks) > total)
    chunks = total > 0 ? static_cast<int>(total) : 1;
  if (chunks <= 1) {
    fn(0, std::uint64_t{0}, total);
    return 1;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(chunks));
  const std::uint64_t per = total / chunks;
  const std::uint64_t extra = total % chunks;
  std::uint64_t begin = 0;
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t end = begin + per + (static_cast<std::uint64_t>(c) < extra);
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
  return chunks;
}

}  // namespace primal
