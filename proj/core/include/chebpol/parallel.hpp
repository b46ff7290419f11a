#pragma once

#include <cstddef>
#include <functional>

namespace chebpol {

/// Caps the number of worker threads used by parallel maps (1 = serial).
/// Results are bit-identical for any cap: workers only fill disjoint index
/// ranges and every reduction happens afterwards in index order.
void set_thread_cap(int threads);
int thread_cap();

/// Applies body(i) for i in [0, n). Each index is processed exactly once;
/// bodies must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chebpol
