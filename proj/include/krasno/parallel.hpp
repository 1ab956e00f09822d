#pragma once

#include <cstddef>
#include <functional>

namespace krasno {

/// Worker count: KRASNO_THREADS if set to a positive integer, else the
/// hardware concurrency.
unsigned thread_count();

/// Runs f(i) for i in [0, n) over thread_count() workers with a static block
/// split. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace krasno
