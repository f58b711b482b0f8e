#include "reqmine/apriori.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "reqmine/errors.hpp"
#include "reqmine/kernels.hpp"

namespace reqmine {

void AprioriParams::validate() const {
    if (!(min_support > 0.0 && min_support <= 1.0)) {
        throw Error("min_support must be in (0, 1]");
    }
    if (!(min_confidence > 0.0 && min_confidence <= 1.0)) {
        throw Error("min_confidence must be in (0, 1]");
    }
    if (max_rule_length < 2) throw Error("max_rule_length must be at least 2");
    if (min_lift < 0.0) throw Error("min_lift must be non-negative");
}

std::uint64_t itemset_count(const ResponseMatrix& matrix, const Itemset& itemset) {
    if (itemset.empty()) return matrix.row_count();
    std::vector<const std::uint64_t*> cols;
    cols.reserve(itemset.size());
    for (AttributeId id : itemset) {
        if (id.index >= matrix.attribute_count()) {
            throw ItemOutOfRange("item index " + std::to_string(id.index) +
                                 " out of range (matrix has " +
                                 std::to_string(matrix.attribute_count()) + " attributes)");
        }
        cols.push_back(matrix.column(id).data());
    }
    const std::size_t words = matrix.column(itemset.front()).word_count();
    return kernels::active_kernels().intersect_popcount(cols.data(), cols.size(), words);
}

double itemset_support(const ResponseMatrix& matrix, const Itemset& itemset) {
    return static_cast<double>(itemset_count(matrix, itemset)) /
           static_cast<double>(matrix.row_count());
}

namespace {

// True when `candidate` (size k+1) has every k-subset in the sorted list
// of frequent k-itemsets.
bool all_subsets_frequent(const Itemset& candidate, const std::vector<Itemset>& frequent_sorted) {
    Itemset subset(candidate.size() - 1);
    for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t r = 0; r < candidate.size(); ++r) {
            if (r != drop) subset[w++] = candidate[r];
        }
        if (!std::binary_search(frequent_sorted.begin(), frequent_sorted.end(), subset)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Itemset> generate_candidates(const std::vector<FrequentItemset>& frequent_k) {
    if (frequent_k.empty()) return {};
    const std::size_t k = frequent_k.front().items.size();
    std::vector<Itemset> sets;
    sets.reserve(frequent_k.size());
    for (const FrequentItemset& f : frequent_k) {
        if (f.items.size() != k) {
            throw MixedSizes("generate_candidates: itemsets of size " + std::to_string(k) +
                             " and " + std::to_string(f.items.size()) + " mixed in one level");
        }
        sets.push_back(f.items);
    }
    std::sort(sets.begin(), sets.end());

    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            // Join requires an identical (k-1)-prefix; the sorted order makes
            // every joinable partner adjacent, so stop at the first mismatch.
            if (!std::equal(sets[i].begin(), sets[i].end() - 1, sets[j].begin(),
                            sets[j].end() - 1)) {
                break;
            }
            Itemset candidate = sets[i];
            candidate.push_back(sets[j].back());
            if (all_subsets_frequent(candidate, sets)) {
                candidates.push_back(std::move(candidate));
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    return candidates;
}

std::vector<FrequentItemset> find_frequent_itemsets(const ResponseMatrix& matrix,
                                                    const AprioriParams& params) {
    params.validate();
    const double n = static_cast<double>(matrix.row_count());

    std::vector<FrequentItemset> result;
    std::vector<FrequentItemset> level;
    for (std::uint32_t j = 0; j < matrix.attribute_count(); ++j) {
        const Itemset single{AttributeId{j}};
        const std::uint64_t count = itemset_count(matrix, single);
        const double support = static_cast<double>(count) / n;
        if (support >= params.min_support) {
            level.push_back(FrequentItemset{single, count, support});
        }
    }

    while (!level.empty()) {
        result.insert(result.end(), level.begin(), level.end());
        if (level.front().items.size() >= params.max_rule_length) break;

        std::vector<FrequentItemset> next;
        for (Itemset& candidate : generate_candidates(level)) {
            const std::uint64_t count = itemset_count(matrix, candidate);
            const double support = static_cast<double>(count) / n;
            if (support >= params.min_support) {
                next.push_back(FrequentItemset{std::move(candidate), count, support});
            }
        }
        level = std::move(next);
    }
    // Levels are appended in order and sorted within, which is exactly the
    // (size, lexicographic) order.
    return result;
}

std::vector<AssociationRule> derive_rules(const std::vector<FrequentItemset>& frequent,
                                          const ResponseMatrix& matrix,
                                          const AprioriParams& params) {
    params.validate();
    const double n = static_cast<double>(matrix.row_count());

    std::map<Itemset, std::uint64_t> counts;
    for (const FrequentItemset& f : frequent) counts[f.items] = f.count;

    std::vector<AssociationRule> rules;
    for (const FrequentItemset& f : frequent) {
        const Itemset& whole = f.items;
        if (whole.size() < 2 || whole.size() > params.max_rule_length) continue;

        // Non-empty proper subsets of `whole` as antecedents.
        const std::size_t partitions = std::size_t{1} << whole.size();
        for (std::size_t mask = 1; mask + 1 < partitions; ++mask) {
            Itemset antecedent, consequent;
            for (std::size_t b = 0; b < whole.size(); ++b) {
                if (mask & (std::size_t{1} << b)) {
                    antecedent.push_back(whole[b]);
                } else {
                    consequent.push_back(whole[b]);
                }
            }
            // Subsets of a frequent itemset are frequent, so both lookups hit.
            const std::uint64_t count_a = counts.at(antecedent);
            const std::uint64_t count_b = counts.at(consequent);
            const double confidence =
                static_cast<double>(f.count) / static_cast<double>(count_a);
            if (confidence < params.min_confidence) continue;
            const double lift = confidence / (static_cast<double>(count_b) / n);
            if (lift < params.min_lift) continue;
            rules.push_back(AssociationRule{std::move(antecedent), std::move(consequent),
                                            f.support, confidence, lift});
        }
    }
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
        return a.consequent < b.consequent;
    });
    return rules;
}

}  // namespace reqmine
