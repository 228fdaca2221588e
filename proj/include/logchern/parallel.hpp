#pragma once

#include <cstddef>
#include <functional>

namespace logchern {

// Worker cap from LOGCHERN_THREADS (unset: hardware concurrency; 0 or 1:
// serial).
std::size_t thread_limit();
void set_thread_limit(std::size_t n);

// Runs fn(0..n-1), possibly concurrently. The first exception is rethrown
// after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace logchern
