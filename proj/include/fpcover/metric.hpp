#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "fpcover/errors.hpp"

namespace fpcover {

/// Distance function used for a point set. All three satisfy the metric
/// axioms; Euclidean is the default throughout the toolkit.
enum class MetricKind { Euclidean, Manhattan, Chebyshev };

std::string to_string(MetricKind kind);

/// Parses "l2" / "l1" / "linf" (also accepts the full names).
MetricKind parse_metric(const std::string& text);

namespace detail {

// Raw per-metric kernels over float rows. All arithmetic stays in single
// precision. The "comparable" value is the quantity scans order by: squared
// distance for Euclidean (no square root in the hot loop), the distance
// itself for Manhattan/Chebyshev.

inline float comparable_l2(const float* a, const float* b, std::size_t d) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < d; ++i) {
        const float diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

inline float comparable_l1(const float* a, const float* b, std::size_t d) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < d; ++i) {
        acc += std::fabs(a[i] - b[i]);
    }
    return acc;
}

inline float comparable_linf(const float* a, const float* b, std::size_t d) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < d; ++i) {
        const float diff = std::fabs(a[i] - b[i]);
        if (diff > acc) acc = diff;
    }
    return acc;
}

}  // namespace detail

/// Scan-ordering value for the pair (squared distance under Euclidean).
/// Monotone in the true distance, so argmin/argmax decisions agree with it.
inline float comparable_distance(const float* a, const float* b, std::size_t d,
                                 MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean: return detail::comparable_l2(a, b, d);
        case MetricKind::Manhattan: return detail::comparable_l1(a, b, d);
        case MetricKind::Chebyshev: return detail::comparable_linf(a, b, d);
    }
    return 0.0f;
}

/// Maps a comparable value back to the true distance (square root boundary
/// for Euclidean). Negative sentinel values clamp to zero.
inline float distance_from_comparable(float comparable, MetricKind kind) {
    if (comparable <= 0.0f) return 0.0f;
    return kind == MetricKind::Euclidean ? std::sqrt(comparable) : comparable;
}

inline float metric_distance(const float* a, const float* b, std::size_t d,
                             MetricKind kind) {
    return distance_from_comparable(comparable_distance(a, b, d, kind), kind);
}

/// Largest comparable value whose reported distance is still <= delta.
/// Comparing comparables against this threshold is bit-for-bit equivalent to
/// comparing reported distances against delta, including at rounding
/// boundaries of the float square root.
float comparable_threshold(float delta, MetricKind kind);

/// The public distance operation with dimension checking.
float distance(std::span<const float> a, std::span<const float> b, MetricKind kind);

}  // namespace fpcover
