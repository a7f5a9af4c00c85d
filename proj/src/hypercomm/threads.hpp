#pragma once

#include <cstdint>
#include <functional>

namespace hypercomm {

// Worker count for embarrassingly parallel loops. requested < 0 defers to the
// HYPERCOMM_THREADS environment variable, then hardware concurrency;
// 0 means serial deterministic mode (one worker).
unsigned resolve_thread_count(int requested);

// Runs f(0) .. f(count-1) on up to `threads` workers. Tasks must be
// independent; with threads <= 1 this is a plain serial loop.
void parallel_for(std::uint64_t count, unsigned threads,
                  const std::function<void(std::uint64_t)>& f);

}  // namespace hypercomm
