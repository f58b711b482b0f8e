#pragma once

#include <cstdint>
#include <vector>

#include "reqmine/survey.hpp"
#include "reqmine/types.hpp"

namespace reqmine {

// An itemset together with the number of rows containing it. Supports are
// kept as exact integer counts; the fraction is derived at presentation time.
struct FrequentItemset {
    Itemset items;
    std::uint64_t count = 0;
    double support = 0.0;  // count / N

    friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

struct AssociationRule {
    Itemset antecedent;
    Itemset consequent;
    double support = 0.0;     // supp(antecedent U consequent)
    double confidence = 0.0;  // supp(A U B) / supp(A)
    double lift = 0.0;        // confidence / supp(B)

    friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

struct AprioriParams {
    double min_support = 0.50;
    double min_confidence = 0.75;
    std::uint32_t max_rule_length = 2;  // |antecedent| + |consequent|
    double min_lift = 1.00;

    // Throws reqmine::Error when a field is out of range.
    void validate() const;
};

// Fraction of rows containing every item of the set; the empty itemset has
// support 1. Throws ItemOutOfRange for an item index >= attribute count.
double itemset_support(const ResponseMatrix& matrix, const Itemset& itemset);

// Integer-count form of itemset_support.
std::uint64_t itemset_count(const ResponseMatrix& matrix, const Itemset& itemset);

// Level-wise join-and-prune step: joins frequent k-itemsets sharing their
// first k-1 items and keeps candidates whose every k-subset is frequent.
// Output is sorted lexicographically. Throws MixedSizes when the input
// itemsets do not all have the same size.
std::vector<Itemset> generate_candidates(const std::vector<FrequentItemset>& frequent_k);

// All itemsets of size 1..max_rule_length with support >= min_support,
// sorted by (size, lexicographic items). Mining stops early at the first
// empty level.
std::vector<FrequentItemset> find_frequent_itemsets(const ResponseMatrix& matrix,
                                                    const AprioriParams& params);

// Every partition A => B of each frequent itemset (A, B non-empty and
// disjoint) with confidence >= min_confidence and lift >= min_lift, sorted
// by (antecedent, consequent). `frequent` must be the output of
// find_frequent_itemsets on the same matrix.
std::vector<AssociationRule> derive_rules(const std::vector<FrequentItemset>& frequent,
                                          const ResponseMatrix& matrix,
                                          const AprioriParams& params);

}  // namespace reqmine
