#pragma once

#include <cstddef>
#include <functional>

namespace conefaces {

/// Worker count: CONEFACES_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(w) for w in [0, workers) on separate threads and joins them.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace conefaces
