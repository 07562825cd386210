#pragma once

#include <cstddef>
#include <functional>

namespace hive {

/// Worker cap from HIVE_VEM_THREADS (default: hardware concurrency, min 1).
int worker_count();

/// Runs body(k) for k in [0, n) on up to `workers` threads in contiguous
/// blocks. Bodies must write to disjoint outputs. If several bodies throw, the
/// exception from the lowest index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  int workers = worker_count());

} // namespace hive
