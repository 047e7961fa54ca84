#ifndef HOPSET_PARALLEL_HPP
#define HOPSET_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hopset {

// Worker count: hardware concurrency, capped by HOPSET_THREADS when set (>=1).
unsigned worker_count();

// Runs body(i) for i in [0, count) across worker_count() threads. Bodies
// must write only to disjoint state; callers merge in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hopset

#endif  // HOPSET_PARALLEL_HPP
