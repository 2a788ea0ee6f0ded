#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "unn/dataset.hpp"
#include "unn/errors.hpp"
#include "unn/ordering.hpp"

namespace unn {

// The min(k, m-1) slots nearest to `slot` by |slot - j| on a line of m
// equidistant slots, the query slot itself excluded. Ordered by distance;
// at equal distance the left slot comes first.
std::vector<int> latent_neighbors(int slot, int m, int k);

namespace detail {

// `Line` is anything exposing m() and pattern_at(slot): a LatentOrdering or
// the no-copy insertion view the embedding strategies score with.
//
// Neighbor choice must not depend on the line's orientation or the DSRE of
// an ordering and of its mirror image would differ whenever a tied ring is
// truncated. So the tie at the outermost ring is broken by the smaller
// pattern index, and the collected indices are returned ascending so the
// reconstruction sums in an orientation-independent order.
template <typename Line>
void reconstruction_neighbors(int slot, const Line& line, int k, std::vector<int>& out) {
    const int m = line.m();
    if (k < 1) {
        throw std::invalid_argument("neighborhood size k must be >= 1");
    }
    if (slot < 0 || slot >= m) {
        throw std::invalid_argument("slot out of range");
    }
    if (m <= 1) {
        throw NoNeighborsError("reconstruction needs at least one other embedded pattern");
    }
    const int want = std::min(k, m - 1);
    out.clear();
    out.reserve(static_cast<std::size_t>(want));
    for (int ring = 1; static_cast<int>(out.size()) < want; ++ring) {
        const int left = slot - ring;
        const int right = slot + ring;
        const bool has_left = left >= 0;
        const bool has_right = right < m;
        if (has_left && has_right) {
            if (want - static_cast<int>(out.size()) >= 2) {
                out.push_back(line.pattern_at(left));
                out.push_back(line.pattern_at(right));
            } else {
                out.push_back(std::min(line.pattern_at(left), line.pattern_at(right)));
            }
        } else if (has_left) {
            out.push_back(line.pattern_at(left));
        } else if (has_right) {
            out.push_back(line.pattern_at(right));
        }
    }
    std::sort(out.begin(), out.end());
}

// Mean of the neighbor rows, accumulated in ascending pattern-index order.
template <typename Line, typename Derived>
void reconstruct_at_slot(int slot, const Line& line, const Eigen::MatrixBase<Derived>& patterns,
                         int k, std::vector<int>& idx,
                         Eigen::RowVectorX<typename Derived::Scalar>& out) {
    reconstruction_neighbors(slot, line, k, idx);
    out.setZero(patterns.cols());
    for (const int p : idx) {
        out += patterns.row(p);
    }
    out /= static_cast<typename Derived::Scalar>(idx.size());
}

template <typename Line, typename Derived>
double error_at_slot(int slot, const Line& line, const Eigen::MatrixBase<Derived>& patterns, int k,
                     std::vector<int>& idx, Eigen::RowVectorX<typename Derived::Scalar>& scratch) {
    reconstruct_at_slot(slot, line, patterns, k, idx, scratch);
    return (patterns.row(line.pattern_at(slot)) - scratch).squaredNorm();
}

} // namespace detail

// KNN reconstruction of pattern i: the mean of the data vectors of its k
// latent-space neighbors.
template <typename Derived>
Eigen::RowVectorX<typename Derived::Scalar> knn_reconstruct(int pattern, const LatentOrdering& ordering,
                                                            const Eigen::MatrixBase<Derived>& patterns,
                                                            int k) {
    std::vector<int> idx;
    Eigen::RowVectorX<typename Derived::Scalar> out;
    detail::reconstruct_at_slot(ordering.slot_of(pattern), ordering, patterns, k, idx, out);
    return out;
}

// Squared Euclidean residual of one pattern against its reconstruction.
template <typename Derived>
double pointwise_error(int pattern, const LatentOrdering& ordering,
                       const Eigen::MatrixBase<Derived>& patterns, int k) {
    std::vector<int> idx;
    Eigen::RowVectorX<typename Derived::Scalar> scratch;
    return detail::error_at_slot(ordering.slot_of(pattern), ordering, patterns, k, idx, scratch);
}

// Data space reconstruction error: the mean over all patterns of the squared
// residual norms. Requires a complete ordering over every row of `patterns`.
template <typename Derived>
double dsre(const LatentOrdering& ordering, const Eigen::MatrixBase<Derived>& patterns, int k) {
    const int n = static_cast<int>(patterns.rows());
    if (n < 2) {
        throw NoNeighborsError("DSRE needs at least two patterns");
    }
    if (!ordering.is_complete_for(n)) {
        throw std::invalid_argument("ordering must embed every pattern exactly once");
    }
    std::vector<int> idx;
    Eigen::RowVectorX<typename Derived::Scalar> scratch;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += detail::error_at_slot(ordering.slot_of(i), ordering, patterns, k, idx, scratch);
    }
    return acc / static_cast<double>(n);
}

inline RowVector knn_reconstruct(int pattern, const LatentOrdering& ordering, const Dataset& data, int k) {
    return knn_reconstruct(pattern, ordering, data.patterns(), k);
}

inline double pointwise_error(int pattern, const LatentOrdering& ordering, const Dataset& data, int k) {
    return pointwise_error(pattern, ordering, data.patterns(), k);
}

inline double dsre(const LatentOrdering& ordering, const Dataset& data, int k) {
    return dsre(ordering, data.patterns(), k);
}

} // namespace unn
