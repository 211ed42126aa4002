#pragma once
// Thin OpenMP shim.  All parallel loops in this project are maps over
// preassigned index ranges whose results land in per-index slots; reductions
// happen afterwards as serial folds in index order.  That makes every result
// bitwise independent of the worker count, which the tests assert.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdint>

namespace zetamv::par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    omp_set_dynamic(0);
    omp_set_num_threads(n > 0 ? n : 1);
#else
    (void)n;
#endif
}

// Parallel map over [0, n); body must only write state owned by index i.
template <typename F>
void for_each_index(std::int64_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
#else
    for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

} // namespace zetamv::par
