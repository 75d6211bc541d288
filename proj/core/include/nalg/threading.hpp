#pragma once

#include <functional>

namespace nalg {

// Runs fn(i) for i in [0, n) on up to `threads` workers, blocking until all
// complete. Chunking is deterministic but callers must not depend on
// execution order; anything order-sensitive has to be merged canonically
// afterwards. threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace nalg
