#pragma once

#include <cstddef>
#include <functional>

namespace umbracal {

/// Worker count: UMBRACAL_THREADS if set (integer >= 1), else the hardware
/// concurrency. Throws std::invalid_argument for a malformed value.
int thread_count();

/// Calls body(i) for i in [0, n), split into contiguous blocks across
/// thread_count() workers. Each index is written by exactly one worker, so
/// results stored per index do not depend on the thread count. The first
/// exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace umbracal
