#pragma once

// Deterministic fork-join over integer ranges.
//
// Chunk boundaries depend only on the range and the chunk size, never on the
// worker count, and results come back in chunk order. Reducing them
// left-to-right therefore gives bit-identical floating-point sums for any
// number of threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qprimes {

struct Exec {
  unsigned threads = 1;
};

inline constexpr std::uint64_t kDefaultChunk = 1u << 14;

template <class T, class Fn>
std::vector<T> map_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, Exec exec, Fn&& fn) {
  if (end <= begin) return {};
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t n_chunks = (end - begin + chunk - 1) / chunk;
  std::vector<T> results(n_chunks);

  auto run_chunk = [&](std::uint64_t i) {
    const std::uint64_t lo = begin + i * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    results[i] = fn(lo, hi);
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(exec.threads, 1u), n_chunks));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n_chunks; ++i) run_chunk(i);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < n_chunks; i = next++) {
        try {
          run_chunk(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n_chunks;
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace qprimes
