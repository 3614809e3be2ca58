#pragma once

#include <cstddef>
#include <functional>

namespace fhs {

// Global worker count for the pairwise kernels. 1 = fully serial.
void set_thread_count(int n);
int thread_count();

// Sum of fn(begin, end) over fixed chunks of [0, n). The chunk partition is
// independent of the thread count and partials are combined serially in chunk
// order, so results are bitwise reproducible for any thread count.
double chunked_sum(std::size_t n, std::size_t chunk,
                   const std::function<double(std::size_t, std::size_t)>& fn);

// Runs fn(i) for i in [0, n); each index writes only its own output slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fhs
