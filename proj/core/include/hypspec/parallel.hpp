#pragma once

#include <cstddef>
#include <functional>

namespace hypspec {

// Worker count: hardware concurrency, capped by HYPSPEC_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, count). Indices are split into contiguous chunks,
// one per worker; callers write into preallocated slots so output order does
// not depend on scheduling. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hypspec
