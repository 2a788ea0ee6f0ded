#include "unn/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "unn/errors.hpp"
#include "unn/knn.hpp"

namespace unn {

OracleResult brute_force(const Dataset& data, int k, int max_n, bool dedup_reversals) {
    const int n = static_cast<int>(data.size());
    if (n < 2) {
        throw std::invalid_argument("exhaustive search needs at least two patterns");
    }
    if (k < 1) {
        throw std::invalid_argument("neighborhood size k must be >= 1");
    }
    if (n > max_n) {
        throw SizeCapError("exhaustive search refused: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(max_n));
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    OracleResult result;
    bool have_best = false;
    // std::next_permutation walks lexicographically, so keeping the first
    // strict improvement leaves the lexicographically smallest minimizer.
    // A reversal-closed set's lexicographic minimum always has
    // front < back, so deduplication cannot hide it.
    do {
        if (dedup_reversals && perm.front() > perm.back()) {
            continue;
        }
        LatentOrdering ordering(perm);
        const double value = dsre(ordering, data, k);
        ++result.evaluated;
        if (!have_best || value < result.best_dsre) {
            have_best = true;
            result.best_dsre = value;
            result.best_ordering = std::move(ordering);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return result;
}

} // namespace unn
