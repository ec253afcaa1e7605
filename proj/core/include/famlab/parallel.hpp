#pragma once

#include <cstddef>
#include <functional>

namespace famlab {

// Worker cap: FAMLAB_THREADS when set (values < 1 mean 1), otherwise a
// hardware-based default. Results of all parallel code paths are
// required to be identical at any worker count.
int worker_count();

// Runs fn(i) for i in [0, n) across workers. Callers own the output
// slots (indexed by i), so the merge order is fixed regardless of
// scheduling. Exceptions from fn are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace famlab
