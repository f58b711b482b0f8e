#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace reqmine {

// Index of a questionnaire attribute (a column of the response matrix).
struct AttributeId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(AttributeId, AttributeId) = default;
};

// Itemsets are kept sorted ascending with no duplicates; vector comparison
// then gives the lexicographic order used everywhere for deterministic output.
using Itemset = std::vector<AttributeId>;

inline bool is_canonical_itemset(const Itemset& items) {
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (!(items[i - 1] < items[i])) return false;
    }
    return true;
}

}  // namespace reqmine
