#pragma once

#include <cstdint>
#include <vector>

#include "reqmine/apriori.hpp"
#include "reqmine/types.hpp"

namespace reqmine {

// Binary directed adjacency over the selected requirements: cell (i, j) is 1
// iff a mined rule implies requirement j from requirement i. The diagonal is
// always zero.
class RequirementMatrix {
public:
    RequirementMatrix() = default;
    explicit RequirementMatrix(std::vector<AttributeId> requirements)
        : requirements_(std::move(requirements)),
          cells_(requirements_.size() * requirements_.size(), 0) {}

    std::size_t size() const { return requirements_.size(); }
    const std::vector<AttributeId>& requirements() const { return requirements_; }

    bool at(std::size_t i, std::size_t j) const { return cells_[i * size() + j] != 0; }
    void set(std::size_t i, std::size_t j, bool value) {
        if (i != j) cells_[i * size() + j] = value ? 1 : 0;
    }

    friend bool operator==(const RequirementMatrix&, const RequirementMatrix&) = default;

private:
    std::vector<AttributeId> requirements_;
    std::vector<std::uint8_t> cells_;  // row-major size x size
};

struct RequirementGroup {
    std::vector<AttributeId> members;  // sorted ascending

    friend bool operator==(const RequirementGroup&, const RequirementGroup&) = default;
};

// Marks cell (a, b) for every antecedent item a and consequent item b of each
// rule; with the single-item rules of the default parameters this is exactly
// one cell per rule. Throws UnknownRequirement when a rule mentions an
// attribute outside `requirements`.
RequirementMatrix build_matrix(const std::vector<AssociationRule>& rules,
                               const std::vector<AttributeId>& requirements);

// Connected components of the symmetrized adjacency (edge iff cell[i][j] or
// cell[j][i]), singletons included, sorted by smallest member index.
std::vector<RequirementGroup> extract_groups(const RequirementMatrix& matrix);

}  // namespace reqmine
