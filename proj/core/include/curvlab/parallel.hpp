#pragma once

#include <cstddef>
#include <functional>

namespace curvlab {

/// Worker count: CURVLAB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, count) on up to worker_count() threads. Each
/// index runs exactly once; callers write results by index, so output does
/// not depend on scheduling. The exception of the lowest failing index is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace curvlab
