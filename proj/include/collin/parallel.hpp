#pragma once

#include <cstddef>
#include <functional>

namespace collin {

/// Worker threads to use: COLLIN_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index runs exactly once; callers write results into pre-sized slots so the
/// outcome never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace collin
