#include "reqmine/reqmatrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "reqmine/errors.hpp"
#include "reqmine/union_find.hpp"

namespace reqmine {

RequirementMatrix build_matrix(const std::vector<AssociationRule>& rules,
                               const std::vector<AttributeId>& requirements) {
    std::map<AttributeId, std::size_t> position;
    for (std::size_t i = 0; i < requirements.size(); ++i) position[requirements[i]] = i;

    const auto lookup = [&](AttributeId id) {
        const auto it = position.find(id);
        if (it == position.end()) {
            throw UnknownRequirement("rule mentions attribute " + std::to_string(id.index) +
                                     ", which is not a selected requirement");
        }
        return it->second;
    };

    RequirementMatrix matrix(requirements);
    for (const AssociationRule& rule : rules) {
        for (AttributeId a : rule.antecedent) {
            const std::size_t i = lookup(a);
            for (AttributeId b : rule.consequent) {
                matrix.set(i, lookup(b), true);
            }
        }
    }
    return matrix;
}

std::vector<RequirementGroup> extract_groups(const RequirementMatrix& matrix) {
    const std::size_t n = matrix.size();
    DisjointSetUnion dsu(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix.at(i, j) || matrix.at(j, i)) dsu.unite(i, j);
        }
    }

    // Bucket members under their root, keyed by the smallest member index so
    // groups come out in that order.
    std::map<std::size_t, std::vector<AttributeId>> buckets;
    std::vector<std::size_t> smallest(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = dsu.find(i);
        smallest[root] = std::min(smallest[root], i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        buckets[smallest[dsu.find(i)]].push_back(matrix.requirements()[i]);
    }

    std::vector<RequirementGroup> groups;
    groups.reserve(buckets.size());
    for (auto& [first, members] : buckets) {
        std::sort(members.begin(), members.end());
        groups.push_back(RequirementGroup{std::move(members)});
    }
    return groups;
}

}  // namespace reqmine
