#pragma once

#include <vector>

namespace unn {

// Assignment of pattern indices to equidistant slots on a line. Slots run
// 0..m-1 and only their relative order carries meaning. The mapping is a
// bijection between the embedded pattern indices and the slot range.
class LatentOrdering {
public:
    LatentOrdering() = default;

    // pattern_by_slot[s] = pattern occupying slot s. Indices must be
    // distinct and non-negative.
    explicit LatentOrdering(std::vector<int> pattern_by_slot);

    // Patterns 0..n-1 placed in dataset-row order.
    static LatentOrdering identity(int n);

    int m() const { return static_cast<int>(by_slot_.size()); }

    bool embeds(int pattern) const;
    int slot_of(int pattern) const; // throws std::invalid_argument if absent
    int pattern_at(int slot) const; // throws std::invalid_argument if out of range

    // True when the embedded indices are exactly 0..n-1.
    bool is_complete_for(int n) const;

    const std::vector<int>& patterns_by_slot() const { return by_slot_; }

    // Same patterns with slots mirrored: slot s becomes m-1-s.
    LatentOrdering reversed() const;

    friend LatentOrdering insert_at(const LatentOrdering& partial, int pattern, int slot);

    friend bool operator==(const LatentOrdering& a, const LatentOrdering& b) {
        return a.by_slot_ == b.by_slot_;
    }

private:
    void place(int pattern, int slot);
    void reindex_from(int slot);

    std::vector<int> by_slot_;
    std::vector<int> slot_by_pattern_; // -1 = not embedded; grown on demand
};

// Inserts `pattern` before slot `slot` (slot == m appends); every pattern at
// slot >= `slot` shifts right by one. Pure: the input ordering is untouched.
LatentOrdering insert_at(const LatentOrdering& partial, int pattern, int slot);

} // namespace unn
