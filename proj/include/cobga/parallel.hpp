#pragma once

#include <functional>

namespace cobga {

// Runs fn(0..count-1) on up to `workers` threads; fn must be safe to call
// concurrently for distinct indices. Falls back to a plain loop for one
// worker.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace cobga
