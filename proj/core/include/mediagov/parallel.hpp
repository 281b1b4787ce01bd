#pragma once

#include <cstdint>
#include <functional>

namespace mediagov {

/// Runs fn(i) for i in [0, n) on up to `jobs` worker threads (jobs <= 0
/// selects the hardware concurrency). Work items are handed out from a
/// shared counter; callers must write results into pre-assigned slots so
/// that the outcome is independent of worker count and completion order.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for_index(std::int64_t n, int jobs, const std::function<void(std::int64_t)>& fn);

int resolve_jobs(int jobs);

}  // namespace mediagov
