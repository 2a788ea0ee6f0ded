#include "unn/knn.hpp"

namespace unn {

std::vector<int> latent_neighbors(int slot, int m, int k) {
    if (m <= 0) {
        throw std::invalid_argument("latent line is empty");
    }
    if (slot < 0 || slot >= m) {
        throw std::invalid_argument("slot out of range");
    }
    if (k < 1) {
        throw std::invalid_argument("neighborhood size k must be >= 1");
    }
    const int want = std::min(k, m - 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(want));
    for (int ring = 1; static_cast<int>(out.size()) < want; ++ring) {
        const int left = slot - ring;
        const int right = slot + ring;
        if (left >= 0) {
            out.push_back(left);
        }
        if (right < m && static_cast<int>(out.size()) < want) {
            out.push_back(right);
        }
    }
    return out;
}

} // namespace unn
