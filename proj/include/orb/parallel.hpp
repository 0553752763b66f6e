#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orb {

// Process indices 0..n-1 with f.  When built with OpenMP and enabled,
// iterations run across threads; the serial path is the reference used by
// the tests and the benchmark.  f must not touch shared mutable state.
template <typename F>
void parallel_for(size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (size_t i = 0; i < n; ++i) f(i);
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace orb
