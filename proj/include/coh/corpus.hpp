#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coh {

/// Evaluate fn(i) for i in [0, count) and collect the results in index
/// order. threads == 1 is the serial reference path; threads == 0 lets
/// OpenMP pick the team size; threads > 1 pins it. Results are stored by
/// index and folded by the caller, so serial and parallel runs are
/// indistinguishable downstream. The first per-item exception (by index)
/// is rethrown after the loop.
template <typename T, typename Fn>
std::vector<T> parallel_map(int count, const Fn& fn, int threads = 0) {
    std::vector<T> out(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

    if (threads == 1) {
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace coh
