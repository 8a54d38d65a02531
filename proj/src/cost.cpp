#include "fpcover/cost.hpp"

#include <limits>
#include <string>

#include "fpcover/errors.hpp"
#include "fpcover/parallel.hpp"

namespace fpcover {

namespace {

// Comparable-space nearest center for one point; returns (value, position in C).
inline std::pair<float, std::size_t> nearest_comparable(const float* p,
                                                        const IndexSubset& centers,
                                                        const PointSet& ps) {
    const std::size_t d = ps.dim();
    const MetricKind kind = ps.metric();
    float best = std::numeric_limits<float>::infinity();
    std::size_t best_pos = 0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const float cmp = comparable_distance(p, ps.row(centers[c]), d, kind);
        if (cmp < best) {  // strict: first attaining position wins
            best = cmp;
            best_pos = c;
        }
    }
    return {best, best_pos};
}

}  // namespace

std::pair<float, std::uint32_t> dist_to_set(std::uint32_t point,
                                            const IndexSubset& centers,
                                            const PointSet& ps) {
    centers.require_parent(ps);
    if (centers.size() == 0) {
        throw InvalidInputError("dist_to_set needs a nonempty center set");
    }
    if (point >= ps.size()) {
        throw InvalidInputError("point index " + std::to_string(point) +
                                " out of range");
    }
    const auto [cmp, pos] = nearest_comparable(ps.row(point), centers, ps);
    return {distance_from_comparable(cmp, ps.metric()), centers[pos]};
}

CostReport cost(const IndexSubset& centers, const IndexSubset& points,
                const PointSet& ps) {
    centers.require_parent(ps);
    points.require_parent(ps);
    if (centers.size() == 0 || points.size() == 0) {
        throw InvalidInputError("cost needs nonempty center and evaluation sets");
    }

    const std::size_t m = points.size();
    std::vector<float> cmp_values(m);
    std::vector<std::uint32_t> nearest(m);

    // One pass per evaluated point; the max-reduction over (value, position)
    // pairs is partition-invariant, so any worker count gives the same witness.
    const par::Best best = par::reduce_max(m, 1024, [&](std::size_t begin, std::size_t end) {
        par::Best local{-std::numeric_limits<float>::infinity(),
                        std::numeric_limits<std::size_t>::max()};
        for (std::size_t s = begin; s < end; ++s) {
            const auto [value, pos] = nearest_comparable(ps.row(points[s]), centers, ps);
            cmp_values[s] = value;
            nearest[s] = centers[pos];
            local = par::merge_max(local, par::Best{value, s});
        }
        return local;
    });

    CostReport report;
    report.radius = distance_from_comparable(best.value, ps.metric());
    report.witness = points[best.pos];
    report.assignment.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
        report.assignment[s] = {nearest[s],
                                distance_from_comparable(cmp_values[s], ps.metric())};
    }
    return report;
}

}  // namespace fpcover
