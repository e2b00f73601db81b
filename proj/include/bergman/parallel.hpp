#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman {

// Execution policy for the data-parallel sweep kernels.  Serial is the
// reference path; OpenMP must produce identical results because every
// index writes only its own slot (tests assert bitwise equality).
enum class Exec { Serial, OpenMP };

template <typename F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline double wall_time() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

} // namespace bergman
