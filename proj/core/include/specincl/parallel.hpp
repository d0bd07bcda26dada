#pragma once

#include <cstddef>
#include <functional>

namespace specincl {

// Worker count used when a caller passes jobs == 0: SPECINCL_JOBS if set and
// positive, otherwise std::thread::hardware_concurrency().
std::size_t default_jobs();

// Calls body(begin, end) on contiguous, disjoint chunks of [0, count), using
// up to `jobs` threads (0 = default_jobs()). Chunks are fixed by count and
// jobs only, so results written by index are deterministic. The first
// exception thrown by a worker is rethrown on the calling thread.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace specincl
