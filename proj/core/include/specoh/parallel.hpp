#pragma once

#include <cstddef>
#include <functional>

namespace specoh {

/// Worker count: SPECIES_COHOMOLOGY_THREADS if set and positive, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one per
/// worker; callers write results into preallocated slots so output order does
/// not depend on scheduling. The first exception thrown by a worker is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace specoh
