#pragma once

// Static partition of [0, total) into contiguous ranges, one per worker.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace vinbun::detail {

template <class Fn>
void parallelRanges(int jobs, std::uint64_t total, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 2) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  const auto workers = static_cast<std::uint64_t>(jobs);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total / workers * w + std::min(w, total % workers);
    const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<int>(w)); });
  }
}

}  // namespace vinbun::detail
