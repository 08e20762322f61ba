#pragma once

#include <cstddef>
#include <functional>

namespace td13 {

/// Hardware concurrency, capped by the TD13_THREADS environment variable.
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(begin, end) on each. Chunk boundaries depend only on n and the worker
/// count. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 64);

}  // namespace td13
