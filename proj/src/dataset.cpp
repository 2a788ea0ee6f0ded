#include "unn/dataset.hpp"

#include <stdexcept>
#include <utility>

namespace unn {

Dataset::Dataset(Matrix patterns) : patterns_(std::move(patterns)) {
    if (patterns_.rows() < 1 || patterns_.cols() < 1) {
        throw std::invalid_argument("dataset must have at least one pattern and one dimension");
    }
    if (!patterns_.allFinite()) {
        throw std::invalid_argument("dataset entries must be finite");
    }
}

} // namespace unn
