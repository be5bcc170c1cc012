// Indexed reductions over [0, n) with an OpenMP path and a serial reference
// path. Both paths combine with max/min plus a smallest-index tie-break,
// which is associative and commutative on doubles, so the result is
// bit-identical for any thread count. The serial path is kept as the
// reference the parallel kernels are tested and benchmarked against.
#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tproj {

enum class ExecPolicy { Serial, Parallel };

struct IndexedValue {
    double value = 0.0;
    std::int64_t index = -1;  // -1: empty range
};

namespace detail {

inline bool better_max(const IndexedValue& a, const IndexedValue& b) {
    if (b.index < 0) return false;
    if (a.index < 0) return true;
    if (b.value != a.value) return b.value > a.value;
    return b.index < a.index;
}

inline bool better_min(const IndexedValue& a, const IndexedValue& b) {
    if (b.index < 0) return false;
    if (a.index < 0) return true;
    if (b.value != a.value) return b.value < a.value;
    return b.index < a.index;
}

}  // namespace detail

// Largest f(i) over i in [0, n); ties resolved to the smallest index.
template <class F>
IndexedValue reduce_max_indexed(std::int64_t n, F&& f,
                                ExecPolicy policy = ExecPolicy::Parallel) {
    IndexedValue best;
    if (policy == ExecPolicy::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            IndexedValue cand{f(i), i};
            if (detail::better_max(best, cand)) best = cand;
        }
        return best;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
        IndexedValue local;
#pragma omp for nowait
        for (std::int64_t i = 0; i < n; ++i) {
            IndexedValue cand{f(i), i};
            if (detail::better_max(local, cand)) local = cand;
        }
#pragma omp critical(tproj_reduce_max)
        {
            if (detail::better_max(best, local)) best = local;
        }
    }
    return best;
#else
    return reduce_max_indexed(n, std::forward<F>(f), ExecPolicy::Serial);
#endif
}

// Number of indices in [0, n) satisfying pred. Integer sum, so the result
// is independent of scheduling.
template <class Pred>
std::int64_t count_indexed(std::int64_t n, Pred&& pred,
                           ExecPolicy policy = ExecPolicy::Parallel) {
    std::int64_t count = 0;
    if (policy == ExecPolicy::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            if (pred(i)) ++count;
        }
        return count;
    }
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count)
    for (std::int64_t i = 0; i < n; ++i) {
        if (pred(i)) ++count;
    }
    return count;
#else
    return count_indexed(n, std::forward<Pred>(pred), ExecPolicy::Serial);
#endif
}

template <class F>
IndexedValue reduce_min_indexed(std::int64_t n, F&& f,
                                ExecPolicy policy = ExecPolicy::Parallel) {
    IndexedValue best;
    if (policy == ExecPolicy::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            IndexedValue cand{f(i), i};
            if (detail::better_min(best, cand)) best = cand;
        }
        return best;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
        IndexedValue local;
#pragma omp for nowait
        for (std::int64_t i = 0; i < n; ++i) {
            IndexedValue cand{f(i), i};
            if (detail::better_min(local, cand)) local = cand;
        }
#pragma omp critical(tproj_reduce_min)
        {
            if (detail::better_min(best, local)) best = local;
        }
    }
    return best;
#else
    return reduce_min_indexed(n, std::forward<F>(f), ExecPolicy::Serial);
#endif
}

}  // namespace tproj
