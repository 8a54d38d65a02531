#include "fpcover/metric.hpp"

#include <cmath>
#include <limits>

namespace fpcover {

std::string to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean: return "l2";
        case MetricKind::Manhattan: return "l1";
        case MetricKind::Chebyshev: return "linf";
    }
    return "l2";
}

MetricKind parse_metric(const std::string& text) {
    if (text == "l2" || text == "euclidean") return MetricKind::Euclidean;
    if (text == "l1" || text == "manhattan") return MetricKind::Manhattan;
    if (text == "linf" || text == "chebyshev") return MetricKind::Chebyshev;
    throw InvalidInputError("unknown metric '" + text + "' (expected l2, l1 or linf)");
}

float comparable_threshold(float delta, MetricKind kind) {
    if (std::isnan(delta) || delta < 0.0f) {
        throw InvalidInputError("delta must be a non-negative number");
    }
    if (kind != MetricKind::Euclidean) return delta;
    if (std::isinf(delta)) return delta;

    // Calibrate the squared threshold so that (sq <= t) == (sqrtf(sq) <= delta)
    // for every float sq. Start from delta^2 and nudge across the rounding
    // boundary of the correctly-rounded float square root.
    float t = delta * delta;
    while (std::sqrt(t) > delta) {
        t = std::nextafter(t, 0.0f);
    }
    while (true) {
        const float up = std::nextafter(t, std::numeric_limits<float>::infinity());
        if (std::isinf(up) || std::sqrt(up) > delta) break;
        t = up;
    }
    return t;
}

float distance(std::span<const float> a, std::span<const float> b, MetricKind kind) {
    if (a.size() != b.size()) {
        throw InvalidInputError("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
    if (a.empty()) {
        throw InvalidInputError("points must have dimension >= 1");
    }
    return metric_distance(a.data(), b.data(), a.size(), kind);
}

}  // namespace fpcover
