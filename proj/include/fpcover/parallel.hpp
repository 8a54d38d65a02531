#pragma once

#include <cstddef>
#include <functional>

namespace fpcover::par {

/// Current worker cap (always >= 1).
int max_workers();

/// Caps the number of workers used by parallel scans. 0 restores the default
/// (COVER_KCENTER_THREADS if set, otherwise the hardware thread count).
void set_max_workers(int workers);

/// Runs f(begin, end, chunk_index) over a contiguous partition of [0, n).
/// The partition is a pure function of n and the active worker cap; which
/// thread executes which chunk is unspecified. f must only write to
/// chunk-local or element-disjoint state.
void for_chunks(std::size_t n, std::size_t min_grain,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& f);

/// (value, position) candidate for argmax/argmin reductions.
struct Best {
    float value;
    std::size_t pos;
};

/// Total-order merges: ties on value resolve to the smaller position. Because
/// these are selections (never arithmetic), the global winner is independent
/// of how the index range was partitioned, so parallel reductions match the
/// sequential left-to-right scan bit for bit.
inline Best merge_max(Best a, Best b) {
    if (b.value > a.value || (b.value == a.value && b.pos < a.pos)) return b;
    return a;
}

inline Best merge_min(Best a, Best b) {
    if (b.value < a.value || (b.value == a.value && b.pos < a.pos)) return b;
    return a;
}

/// Parallel argmax over [0, n): chunk_fn(begin, end) returns the chunk-local
/// Best; results merge with merge_max. Identity for the merge is
/// {-inf, SIZE_MAX}, so chunk_fn may return it for empty work.
Best reduce_max(std::size_t n, std::size_t min_grain,
                const std::function<Best(std::size_t, std::size_t)>& chunk_fn);

}  // namespace fpcover::par
