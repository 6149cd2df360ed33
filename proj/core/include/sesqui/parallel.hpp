#pragma once

#include <cstddef>
#include <functional>

namespace sesqui {

// Worker count from SESQUI_THREADS, else the hardware concurrency.
int default_threads();

// Runs body(index) for index in [0, count) on up to `threads` workers.
// Results must be written to per-index slots by the caller.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace sesqui
