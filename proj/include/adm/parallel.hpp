#pragma once

#include <cstddef>
#include <exception>

#ifdef ADM_HAVE_OPENMP
#include <omp.h>
#endif

namespace adm {

/// Runs body(i) for i in [0, count) across OpenMP threads (serially when the
/// library is built without OpenMP). The first exception thrown by any
/// iteration is rethrown on the calling thread after the loop completes.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    std::exception_ptr failure;
    const auto n = static_cast<long long>(count);
#ifdef ADM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#ifdef ADM_HAVE_OPENMP
#pragma omp critical(adm_parallel_for_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

inline int max_threads() noexcept {
#ifdef ADM_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace adm
