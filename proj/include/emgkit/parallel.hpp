#pragma once

#include <cstddef>
#include <functional>

namespace emgkit {

/// Worker cap: EMGKIT_THREADS if set (>=1), else hardware concurrency.
std::size_t max_threads();

/// Runs fn(i) for i in [0, n) on up to max_threads() workers with a static
/// block partition. Callers must make fn(i) write only to slot i (or
/// otherwise disjoint state) so results are independent of scheduling.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace emgkit
