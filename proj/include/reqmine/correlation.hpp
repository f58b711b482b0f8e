#pragma once

#include <vector>

#include "reqmine/bitcolumn.hpp"
#include "reqmine/reqmatrix.hpp"
#include "reqmine/survey.hpp"
#include "reqmine/types.hpp"

namespace reqmine {

struct WeightedEdge {
    AttributeId u;  // u < v
    AttributeId v;
    double weight = 0.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct CorrelationGraph {
    std::vector<AttributeId> nodes;
    std::vector<WeightedEdge> edges;  // sorted by (u, v), no duplicates
};

// Pearson correlation of two binary columns from the raw-score sums
//
//     r = (N*sum(XY) - sum(X)*sum(Y))
//         / sqrt((N*sum(X^2) - sum(X)^2) * (N*sum(Y^2) - sum(Y)^2))
//
// with every sum an exact integer popcount. Throws LengthMismatch for
// unequal lengths and DegenerateVariance when either column is constant.
double pearson(const BitColumn& x, const BitColumn& y);

// Convenience overload for unpacked 0/1 values.
double pearson(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

// One edge per unordered requirement pair adjacent in the matrix (either
// direction), weighted by the Pearson coefficient of the two survey columns.
// A degenerate pair throws DegenerateVariance naming both attributes, unless
// `warnings` is given, in which case the edge is skipped and a message
// appended.
CorrelationGraph build_correlation_graph(const ResponseMatrix& matrix,
                                         const RequirementMatrix& reqmatrix,
                                         std::vector<std::string>* warnings = nullptr);

// Same weighting over every pair of the given requirements.
CorrelationGraph complete_correlation_graph(const ResponseMatrix& matrix,
                                            const std::vector<AttributeId>& requirements,
                                            std::vector<std::string>* warnings = nullptr);

}  // namespace reqmine
