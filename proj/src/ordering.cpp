#include "unn/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace unn {

LatentOrdering::LatentOrdering(std::vector<int> pattern_by_slot) : by_slot_(std::move(pattern_by_slot)) {
    for (int s = 0; s < m(); ++s) {
        const int p = by_slot_[s];
        if (p < 0) {
            throw std::invalid_argument("pattern indices must be non-negative");
        }
        if (static_cast<std::size_t>(p) >= slot_by_pattern_.size()) {
            slot_by_pattern_.resize(static_cast<std::size_t>(p) + 1, -1);
        }
        if (slot_by_pattern_[p] != -1) {
            throw std::invalid_argument("pattern " + std::to_string(p) + " occupies two slots");
        }
        slot_by_pattern_[p] = s;
    }
}

LatentOrdering LatentOrdering::identity(int n) {
    std::vector<int> slots(static_cast<std::size_t>(n));
    std::iota(slots.begin(), slots.end(), 0);
    return LatentOrdering(std::move(slots));
}

bool LatentOrdering::embeds(int pattern) const {
    return pattern >= 0 && static_cast<std::size_t>(pattern) < slot_by_pattern_.size() &&
           slot_by_pattern_[pattern] != -1;
}

int LatentOrdering::slot_of(int pattern) const {
    if (!embeds(pattern)) {
        throw std::invalid_argument("pattern " + std::to_string(pattern) + " is not embedded");
    }
    return slot_by_pattern_[pattern];
}

int LatentOrdering::pattern_at(int slot) const {
    if (slot < 0 || slot >= m()) {
        throw std::invalid_argument("slot " + std::to_string(slot) + " out of range [0, " +
                                    std::to_string(m()) + ")");
    }
    return by_slot_[slot];
}

bool LatentOrdering::is_complete_for(int n) const {
    if (m() != n) {
        return false;
    }
    for (int p = 0; p < n; ++p) {
        if (!embeds(p)) {
            return false;
        }
    }
    return true;
}

LatentOrdering LatentOrdering::reversed() const {
    std::vector<int> slots(by_slot_.rbegin(), by_slot_.rend());
    return LatentOrdering(std::move(slots));
}

void LatentOrdering::place(int pattern, int slot) {
    by_slot_.insert(by_slot_.begin() + slot, pattern);
    if (static_cast<std::size_t>(pattern) >= slot_by_pattern_.size()) {
        slot_by_pattern_.resize(static_cast<std::size_t>(pattern) + 1, -1);
    }
    reindex_from(slot);
}

void LatentOrdering::reindex_from(int slot) {
    for (int s = slot; s < m(); ++s) {
        slot_by_pattern_[by_slot_[s]] = s;
    }
}

LatentOrdering insert_at(const LatentOrdering& partial, int pattern, int slot) {
    if (pattern < 0) {
        throw std::invalid_argument("pattern indices must be non-negative");
    }
    if (partial.embeds(pattern)) {
        throw std::invalid_argument("pattern " + std::to_string(pattern) + " is already embedded");
    }
    if (slot < 0 || slot > partial.m()) {
        throw std::invalid_argument("insertion slot " + std::to_string(slot) + " out of range [0, " +
                                    std::to_string(partial.m()) + "]");
    }
    LatentOrdering out = partial;
    out.place(pattern, slot);
    return out;
}

} // namespace unn
