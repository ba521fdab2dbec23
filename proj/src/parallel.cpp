#include "cmk/parallel.hpp"

#include <exception>
#include <mutex>
#include <vector>

namespace cmk {

void indexed_for(std::size_t n, bool parallel,
                 const std::function<void(std::size_t)>& fn) {
  std::exception_ptr first_error = nullptr;
  std::size_t first_index = n;
  std::mutex error_mutex;

  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (i < first_index) {
        first_index = i;
        first_error = std::current_exception();
      }
    }
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      guarded(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) guarded(i);
#endif
  } else {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
  }

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cmk
