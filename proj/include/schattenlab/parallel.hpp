#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schattenlab {

// Selects between the OpenMP kernels and their serial counterparts. Every
// parallel loop writes into pre-sized per-index slots and reduces them in
// index order afterwards, so both paths produce bit-identical results.
enum class Exec { serial, parallel };

inline void set_num_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int num_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). Bodies must only write to slot i of
// caller-owned storage.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace schattenlab
