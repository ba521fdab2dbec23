#pragma once

#include <cstddef>
#include <functional>

namespace cmk {

// Runs fn(0..n-1), OpenMP-parallel when `parallel` is set and the build has
// OpenMP. Exceptions thrown by iterations are collected and the first one
// (by index) is rethrown after the loop, so results stay deterministic and
// nothing escapes an OpenMP region. Callers write results into per-index
// slots; merging is the caller's job.
void indexed_for(std::size_t n, bool parallel,
                 const std::function<void(std::size_t)>& fn);

}  // namespace cmk
