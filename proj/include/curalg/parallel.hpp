#pragma once

#include <cstddef>
#include <functional>

namespace curalg {

/// Worker count from CURALG_THREADS (default: hardware concurrency, at
/// least 1).
unsigned worker_count();

/// Runs body(i) for every i in [0, n). Callers write into per-index slots so
/// results never depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace curalg
