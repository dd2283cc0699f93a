#pragma once

#include <cstddef>
#include <functional>

namespace musselseg {

/// Worker count for internal parallelism: the MUSSELSEG_THREADS environment
/// variable, where 0 or unset means hardware concurrency. Always >= 1.
int worker_threads();

/// Runs fn(i) for every i in [0, count), possibly on several threads.
/// fn must only write state owned by index i; results must not depend on
/// which thread runs which index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace musselseg
