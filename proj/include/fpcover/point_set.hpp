#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpcover/metric.hpp"

namespace fpcover {

/// Immutable n x d array of single-precision coordinates plus the metric the
/// space carries. Coordinates are validated once at construction (finite, no
/// NaN) so the scan loops stay branch-free.
class PointSet {
public:
    /// Takes ownership of a row-major coordinate block of size n*d.
    PointSet(std::size_t n, std::size_t d, std::vector<float> coords,
             MetricKind metric = MetricKind::Euclidean);

    static PointSet from_rows(const std::vector<std::vector<float>>& rows,
                              MetricKind metric = MetricKind::Euclidean);

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return d_; }
    MetricKind metric() const noexcept { return metric_; }

    const float* row(std::size_t i) const noexcept { return coords_.data() + i * d_; }
    std::span<const float> row_span(std::size_t i) const noexcept {
        return {row(i), d_};
    }
    std::span<const float> coords() const noexcept { return coords_; }

    /// Comparable-space distance between two stored points.
    float comparable_between(std::size_t i, std::size_t j) const noexcept {
        return comparable_distance(row(i), row(j), d_, metric_);
    }
    float distance_between(std::size_t i, std::size_t j) const noexcept {
        return distance_from_comparable(comparable_between(i, j), metric_);
    }

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<float> coords_;
    MetricKind metric_;
};

/// Ordered list of point indices into a PointSet. Order is significant: it is
/// the scan order for traversals and the tie-break order for selections.
/// Indices are validated against the parent (in range, no duplicates).
class IndexSubset {
public:
    IndexSubset(const PointSet& parent, std::vector<std::uint32_t> indices);

    /// The full set 0..n-1 in natural order.
    static IndexSubset full(const PointSet& parent);

    std::size_t size() const noexcept { return indices_.size(); }
    std::uint32_t operator[](std::size_t pos) const noexcept { return indices_[pos]; }
    const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
    std::size_t parent_size() const noexcept { return parent_size_; }

    /// Throws if this subset was built for a differently-sized point set.
    void require_parent(const PointSet& ps) const;

private:
    std::vector<std::uint32_t> indices_;
    std::size_t parent_size_;
};

}  // namespace fpcover
