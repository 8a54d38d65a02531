#include "fpcover/point_set.hpp"

#include <cmath>
#include <string>

#include "fpcover/errors.hpp"

namespace fpcover {

PointSet::PointSet(std::size_t n, std::size_t d, std::vector<float> coords,
                   MetricKind metric)
    : n_(n), d_(d), coords_(std::move(coords)), metric_(metric) {
    if (n_ < 1 || d_ < 1) {
        throw InvalidInputError("point set needs n >= 1 and d >= 1 (got n=" +
                                std::to_string(n_) + ", d=" + std::to_string(d_) + ")");
    }
    if (coords_.size() != n_ * d_) {
        throw InvalidInputError("coordinate block has " + std::to_string(coords_.size()) +
                                " values, expected " + std::to_string(n_ * d_));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i])) {
            throw InvalidInputError("non-finite coordinate at point " +
                                    std::to_string(i / d_) + ", dimension " +
                                    std::to_string(i % d_));
        }
    }
}

PointSet PointSet::from_rows(const std::vector<std::vector<float>>& rows,
                             MetricKind metric) {
    if (rows.empty()) throw InvalidInputError("point set needs n >= 1");
    const std::size_t d = rows.front().size();
    std::vector<float> coords;
    coords.reserve(rows.size() * d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) {
            throw InvalidInputError("row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) +
                                    " values, expected " + std::to_string(d));
        }
        coords.insert(coords.end(), rows[i].begin(), rows[i].end());
    }
    return PointSet(rows.size(), d, std::move(coords), metric);
}

IndexSubset::IndexSubset(const PointSet& parent, std::vector<std::uint32_t> indices)
    : indices_(std::move(indices)), parent_size_(parent.size()) {
    std::vector<bool> seen(parent_size_, false);
    for (const std::uint32_t idx : indices_) {
        if (idx >= parent_size_) {
            throw InvalidInputError("index " + std::to_string(idx) +
                                    " out of range for point set of size " +
                                    std::to_string(parent_size_));
        }
        if (seen[idx]) {
            throw InvalidInputError("duplicate index " + std::to_string(idx) +
                                    " in subset");
        }
        seen[idx] = true;
    }
}

IndexSubset IndexSubset::full(const PointSet& parent) {
    std::vector<std::uint32_t> all(parent.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    return IndexSubset(parent, std::move(all));
}

void IndexSubset::require_parent(const PointSet& ps) const {
    if (ps.size() != parent_size_) {
        throw InvalidInputError("subset was built for a point set of size " +
                                std::to_string(parent_size_) +
                                ", used with one of size " + std::to_string(ps.size()));
    }
}

}  // namespace fpcover
