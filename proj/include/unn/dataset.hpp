#pragma once

#include <Eigen/Dense>

namespace unn {

// Patterns are rows; row-major keeps each pattern contiguous for the
// row-gather heavy reconstruction loops.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::RowVectorXd;
using ConstRowRef = Eigen::Ref<const RowVector>;

// N x d matrix of patterns, validated once: N >= 1, d >= 1, all entries
// finite. Immutable after construction and safe to share across threads.
class Dataset {
public:
    explicit Dataset(Matrix patterns);

    Eigen::Index size() const { return patterns_.rows(); } // N
    Eigen::Index dim() const { return patterns_.cols(); }  // d

    const Matrix& patterns() const { return patterns_; }
    ConstRowRef pattern(Eigen::Index i) const { return patterns_.row(i); }

private:
    Matrix patterns_;
};

} // namespace unn
