#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fpcover/point_set.hpp"

namespace fpcover {

/// Nearest-center assignment for one evaluated point.
struct Assignment {
    std::uint32_t center;  ///< point index of the nearest center
    float distance;        ///< true metric distance to it
};

/// Result of evaluating a center set against an evaluation set: the covering
/// radius max_s d(s,C), the point attaining it, and the per-point assignment.
/// assignment[i] corresponds to position i of the evaluated subset.
struct CostReport {
    float radius;
    std::uint32_t witness;
    std::vector<Assignment> assignment;
};

/// min_{c in C} d(p,c) plus the nearest center. Ties resolve to the earliest
/// position in C's order, which keeps parallel and sequential runs identical.
std::pair<float, std::uint32_t> dist_to_set(std::uint32_t point,
                                            const IndexSubset& centers,
                                            const PointSet& ps);

/// max_{s in S} d(s,C). Witness ties resolve to the earliest position in S.
CostReport cost(const IndexSubset& centers, const IndexSubset& points,
                const PointSet& ps);

}  // namespace fpcover
