#pragma once

#include <cstddef>
#include <functional>

namespace dimscope {

/// Worker count: DIMSCOPE_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t thread_count();

/// Splits [0, n) into contiguous chunks and runs `body(begin, end)` on each.
/// Chunk boundaries depend only on `n` and `threads`; callers that write
/// disjoint per-index outputs get results independent of the thread count.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t threads = thread_count());

}  // namespace dimscope
