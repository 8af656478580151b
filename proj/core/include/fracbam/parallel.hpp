#pragma once

#include <cstddef>
#include <functional>

namespace fracbam {

/// hardware_concurrency(), capped by the FRACBAM_THREADS environment variable
/// when it holds a positive integer. Never less than 1.
unsigned default_thread_count();

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is handed out
/// by an atomic counter; fn must only write to slot i of its outputs. The
/// first exception thrown by any fn is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace fracbam
