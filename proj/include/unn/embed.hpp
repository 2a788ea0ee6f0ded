#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unn/dataset.hpp"
#include "unn/ordering.hpp"

namespace unn {

enum class Strategy {
    Unn1, // score every insertion slot 0..m
    Unn2  // score only the two slots flanking the data-space nearest embedded pattern
};

enum class InsertionOrder { DatasetOrder, Shuffled };

enum class Criterion {
    Pointwise, // squared reconstruction error of the inserted pattern only
    FullDsre   // mean squared reconstruction error over all embedded patterns
};

struct EmbedConfig {
    int k = 2;
    Strategy strategy = Strategy::Unn1;
    InsertionOrder insertion_order = InsertionOrder::DatasetOrder;
    Criterion criterion = Criterion::Pointwise;
    std::optional<std::uint64_t> seed; // required iff insertion_order is Shuffled
    bool record_running_dsre = false;  // adds instrumentation, not counted as work
};

// Counted primitive operations: d-dimensional distance evaluations and
// d-dimensional KNN reconstruction evaluations.
struct OpCounts {
    std::int64_t distance_evals = 0;
    std::int64_t reconstruction_evals = 0;
};

struct TraceEntry {
    int pattern = 0;
    int candidate_count = 0;
    int chosen_slot = 0;
    double score = 0.0;
    std::optional<double> running_dsre; // over the patterns embedded so far
    OpCounts ops;                       // work spent on this insertion
};

struct EmbedResult {
    LatentOrdering ordering;
    double final_dsre = 0.0;
    std::vector<TraceEntry> trace;
    OpCounts ops; // totals over all insertions
};

// Insertion slots 0..m inclusive (insert-before semantics; slot m appends).
std::vector<int> candidate_slots_unn1(const LatentOrdering& partial);

// The two insert-before slots flanking the embedded pattern nearest to y in
// data space (Euclidean; distance ties go to the smaller pattern index).
std::vector<int> candidate_slots_unn2(const LatentOrdering& partial, ConstRowRef y,
                                      const Dataset& data);

// Criterion value of hypothetically inserting `pattern` before `slot`. The
// first insertion into an empty line scores 0 by convention. No ordering is
// materialized; the cost is k*d for the pointwise criterion.
double score_insertion(const LatentOrdering& partial, int pattern, int slot, const Dataset& data,
                       const EmbedConfig& config);

// Greedily embeds every pattern: walks the configured insertion order, scores
// the strategy's candidate slots, and inserts at the argmin (score ties go to
// the smallest slot). Deterministic given identical data and config.
EmbedResult embed(const Dataset& data, const EmbedConfig& config);

} // namespace unn
