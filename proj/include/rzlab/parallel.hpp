#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rzlab {

/// Number of worker threads: `requested` if positive, else the RZLAB_JOBS
/// environment variable, else the hardware concurrency (at least 1).
int resolve_jobs(int requested = 0);

/// Calls body(i) for i in [0, count) on up to `jobs` threads. Work is split
/// into contiguous blocks; the first exception thrown is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace rzlab
