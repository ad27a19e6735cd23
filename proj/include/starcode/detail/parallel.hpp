#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace starcode::detail {

inline int resolve_threads(int requested) { return requested < 1 ? 1 : requested; }

// Runs fn(begin, end, worker) over contiguous chunks of [0, total).
template <typename Fn>
void parallel_chunks(std::size_t total, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)),
                            total == 0 ? 1 : total);
  if (workers <= 1) {
    fn(std::size_t{0}, total, 0);
    return;
  }
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<int>(w)); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace starcode::detail
