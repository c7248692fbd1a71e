#ifndef LOSMIX_PARALLEL_HPP
#define LOSMIX_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace losmix {

// Parallel kernels fill per-index buffers (each slot is a pure function of the
// inputs) and reductions happen afterwards in a fixed serial order, so results
// are bit-identical for any thread count. Serial reference variants of every
// kernel live next to the parallel ones and are exercised by the tests and the
// benchmark target.

template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

template <class F>
void serial_for(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace losmix

#endif
