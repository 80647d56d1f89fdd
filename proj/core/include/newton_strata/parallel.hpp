#pragma once

#include <cstddef>
#include <functional>

namespace newton_strata {

/// Hardware concurrency, capped by NEWTON_STRATA_THREADS when that is a
/// positive integer. Never less than 1.
unsigned worker_count();

/// Calls body(i) for every i in [0, count), spread over `threads` workers
/// (0 means worker_count()). Indices are handed out dynamically, so body must
/// not depend on which worker runs it. The first exception thrown by any call
/// is rethrown after all workers have stopped.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace newton_strata
