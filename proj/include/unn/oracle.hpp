#pragma once

#include <cstdint>

#include "unn/dataset.hpp"
#include "unn/ordering.hpp"

namespace unn {

struct OracleResult {
    LatentOrdering best_ordering;
    double best_dsre = 0.0;
    std::uint64_t evaluated = 0; // orderings examined
};

// Exhaustive search over latent orderings. Reversed orderings have equal
// DSRE, so enumeration keeps only the orientation whose first pattern index
// is smaller than its last (exactly half of n!) unless dedup_reversals is
// off. DSRE ties go to the lexicographically smallest ordering. Refuses
// instances with n > max_n.
OracleResult brute_force(const Dataset& data, int k, int max_n = 10, bool dedup_reversals = true);

} // namespace unn
