#include "unn/embed.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "unn/knn.hpp"
#include "unn/rng.hpp"

namespace unn {

namespace {

// Post-insertion line with `pattern` occupying `slot`, answered by index
// arithmetic over the untouched partial ordering. Keeps a candidate score at
// k*d work instead of materializing a shifted copy per candidate.
struct InsertedView {
    const LatentOrdering* base;
    int pattern;
    int slot;

    int m() const { return base->m() + 1; }
    int pattern_at(int s) const {
        if (s == slot) {
            return pattern;
        }
        return base->pattern_at(s < slot ? s : s - 1);
    }
};

struct Scratch {
    std::vector<int> idx;
    RowVector acc;
};

void check_insertion(const LatentOrdering& partial, int pattern, int slot, const Dataset& data) {
    if (pattern < 0 || pattern >= data.size()) {
        throw std::invalid_argument("pattern index out of range");
    }
    if (partial.embeds(pattern)) {
        throw std::invalid_argument("pattern is already embedded");
    }
    if (slot < 0 || slot > partial.m()) {
        throw std::invalid_argument("insertion slot out of range");
    }
}

double score_with_scratch(const LatentOrdering& partial, int pattern, int slot, const Dataset& data,
                          const EmbedConfig& config, Scratch& scratch) {
    check_insertion(partial, pattern, slot, data);
    if (partial.m() == 0) {
        return 0.0; // no neighbors, no reconstruction defined
    }
    const InsertedView view{&partial, pattern, slot};
    if (config.criterion == Criterion::Pointwise) {
        return detail::error_at_slot(slot, view, data.patterns(), config.k, scratch.idx, scratch.acc);
    }
    double acc = 0.0;
    for (int s = 0; s < view.m(); ++s) {
        acc += detail::error_at_slot(s, view, data.patterns(), config.k, scratch.idx, scratch.acc);
    }
    return acc / static_cast<double>(view.m());
}

// Mean squared residual over the patterns embedded so far (trace
// instrumentation). Accumulates in ascending pattern order, the same order
// dsre() uses, so the last trace entry equals final_dsre exactly.
double embedded_mean_error(const LatentOrdering& ordering, const Dataset& data, int k,
                           Scratch& scratch) {
    double acc = 0.0;
    for (int p = 0; p < data.size(); ++p) {
        if (ordering.embeds(p)) {
            acc += detail::error_at_slot(ordering.slot_of(p), ordering, data.patterns(), k,
                                         scratch.idx, scratch.acc);
        }
    }
    return acc / static_cast<double>(ordering.m());
}

} // namespace

std::vector<int> candidate_slots_unn1(const LatentOrdering& partial) {
    std::vector<int> slots(static_cast<std::size_t>(partial.m()) + 1);
    std::iota(slots.begin(), slots.end(), 0);
    return slots;
}

std::vector<int> candidate_slots_unn2(const LatentOrdering& partial, ConstRowRef y,
                                      const Dataset& data) {
    if (partial.m() == 0) {
        throw std::invalid_argument("no embedded pattern to anchor on; the first insertion uses slot 0");
    }
    if (y.size() != data.dim()) {
        throw std::invalid_argument("query vector dimensionality mismatch");
    }
    int best_pattern = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int s = 0; s < partial.m(); ++s) {
        const int p = partial.pattern_at(s);
        const double d2 = (y - data.pattern(p)).squaredNorm();
        if (d2 < best_d2 || (d2 == best_d2 && p < best_pattern)) {
            best_d2 = d2;
            best_pattern = p;
        }
    }
    const int anchor = partial.slot_of(best_pattern);
    return {anchor, anchor + 1};
}

double score_insertion(const LatentOrdering& partial, int pattern, int slot, const Dataset& data,
                       const EmbedConfig& config) {
    if (config.k < 1) {
        throw std::invalid_argument("neighborhood size k must be >= 1");
    }
    Scratch scratch;
    return score_with_scratch(partial, pattern, slot, data, config, scratch);
}

EmbedResult embed(const Dataset& data, const EmbedConfig& config) {
    const int n = static_cast<int>(data.size());
    if (n < 2) {
        throw std::invalid_argument("embedding needs at least two patterns");
    }
    if (config.k < 1) {
        throw std::invalid_argument("neighborhood size k must be >= 1");
    }
    if (config.insertion_order == InsertionOrder::Shuffled && !config.seed.has_value()) {
        throw std::invalid_argument("shuffled insertion order requires a seed");
    }

    std::vector<int> sequence(static_cast<std::size_t>(n));
    std::iota(sequence.begin(), sequence.end(), 0);
    if (config.insertion_order == InsertionOrder::Shuffled) {
        SplitMix64 rng(*config.seed);
        rng.shuffle(sequence);
    }

    EmbedResult result;
    result.trace.reserve(sequence.size());
    LatentOrdering ordering;
    Scratch scratch;
    std::vector<int> candidates;

    for (const int pattern : sequence) {
        TraceEntry entry;
        entry.pattern = pattern;

        if (ordering.m() == 0) {
            check_insertion(ordering, pattern, 0, data);
            entry.candidate_count = 1;
            entry.chosen_slot = 0;
            entry.score = 0.0;
        } else {
            if (config.strategy == Strategy::Unn1) {
                candidates = candidate_slots_unn1(ordering);
            } else {
                candidates = candidate_slots_unn2(ordering, data.pattern(pattern), data);
                entry.ops.distance_evals += ordering.m();
            }
            entry.candidate_count = static_cast<int>(candidates.size());

            // Candidates are ascending, so keeping the first strict minimum
            // selects the smallest slot among equal scores.
            int chosen = -1;
            double best = std::numeric_limits<double>::infinity();
            for (const int c : candidates) {
                const double s = score_with_scratch(ordering, pattern, c, data, config, scratch);
                entry.ops.reconstruction_evals +=
                    config.criterion == Criterion::Pointwise ? 1 : ordering.m() + 1;
                if (s < best) {
                    best = s;
                    chosen = c;
                }
            }
            entry.chosen_slot = chosen;
            entry.score = best;
        }

        ordering = insert_at(ordering, pattern, entry.chosen_slot);
        if (config.record_running_dsre && ordering.m() >= 2) {
            entry.running_dsre = embedded_mean_error(ordering, data, config.k, scratch);
        }
        result.ops.distance_evals += entry.ops.distance_evals;
        result.ops.reconstruction_evals += entry.ops.reconstruction_evals;
        result.trace.push_back(entry);
    }

    result.final_dsre = dsre(ordering, data, config.k);
    result.ordering = std::move(ordering);
    return result;
}

} // namespace unn
