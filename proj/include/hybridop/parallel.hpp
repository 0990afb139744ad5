#pragma once

#include <cstddef>
#include <functional>

namespace hybridop {

/// Worker count used by grid sweeps; 0 means hardware concurrency.
void set_worker_count(int workers);
int worker_count();

/// Runs fn(i) for i in [0, count) across the configured workers. fn must be
/// safe to call concurrently; iteration order within a worker is ascending,
/// so writes into pre-sized buffers stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hybridop
