// Copyright 2026 inertia-eval contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INERTIA_PARALLEL_HPP_
#define INERTIA_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace inertia {

// Resolve a thread-count request: n >= 1 wins, n == 0 falls back to the
// INERTIA_EVAL_THREADS environment variable, then to the hardware count.
inline unsigned resolve_threads(unsigned requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("INERTIA_EVAL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

// Apply fn(begin, end) to fixed-size chunks of [0, count) and return the
// per-chunk results in chunk order. Chunk boundaries depend only on count and
// chunk_size, so reducing the returned vector sequentially yields the same
// result for any thread count.
template <typename R, typename Fn>
std::vector<R> map_chunks(std::size_t count, std::size_t chunk_size,
                          unsigned threads, Fn&& fn) {
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks =
      count == 0 ? 0 : (count + chunk_size - 1) / chunk_size;
  std::vector<R> results(n_chunks);
  if (n_chunks == 0) return results;

  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), n_chunks);
  if (workers == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t begin = c * chunk_size;
      results[c] = fn(begin, std::min(count, begin + chunk_size));
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::size_t begin = c * chunk_size;
      try {
        results[c] = fn(begin, std::min(count, begin + chunk_size));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace inertia

#endif  // INERTIA_PARALLEL_HPP_
