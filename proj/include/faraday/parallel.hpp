#pragma once

// Grid evaluation with an OpenMP kernel and a serial reference. Both paths
// call the same per-point function and write results by index, so their
// outputs are bit-identical.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace faraday {

enum class Execution { Serial, Parallel };

template <class Fn>
auto map_grid(std::size_t n, Fn&& fn, Execution exec)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Row = decltype(fn(std::size_t{}));
  std::vector<Row> out(n);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }

  std::exception_ptr failure;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(faraday_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace faraday
