#pragma once

#include <functional>

namespace mould {

// Worker cap: FLEXION_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int max_threads();

// Runs body(i) for i in [begin, end). Nested calls run serially on the
// calling thread so that per-length parallelism inside parallel checks does
// not oversubscribe.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace mould
