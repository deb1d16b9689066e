#pragma once

#include <cstddef>
#include <functional>

namespace slitpath {

/// Worker count: SLITPATH_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads in contiguous
/// chunks. Each index is visited exactly once, so writes to slot i are
/// deterministic regardless of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace slitpath
