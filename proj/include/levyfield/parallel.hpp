// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace levyfield {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// OpenMP-backed loop over [0, n). Iterations must be independent; results
/// written through index i only, so serial and parallel runs are identical.
template <class F>
void parallel_for(int n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) body(i);
#else
  for (int i = 0; i < n; ++i) body(i);
#endif
}

/// Serial reference for parallel_for, kept for tests and benchmarks.
template <class F>
void serial_for(int n, F&& body) {
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace levyfield
