#pragma once

#include <cstddef>
#include <functional>

namespace qrm {

// Worker count: QRM_WORKERS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Calls fn(i) for i in [0, count) across worker threads. Each index is visited
// exactly once; fn must only write to per-index state. The first exception
// thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qrm
