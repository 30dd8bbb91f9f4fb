#pragma once

#include <cstddef>
#include <functional>

namespace rles {

// Worker count: min(RLES_THREADS, hardware concurrency), at least 1.
int worker_count();

// Static-chunked parallel loop over [0, n). Bodies must write disjoint data.
// Falls back to a plain loop when worker_count() == 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rles
