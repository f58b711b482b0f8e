#include "reqmine/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "reqmine/errors.hpp"
#include "reqmine/kernels.hpp"

namespace reqmine {

double pearson(const BitColumn& x, const BitColumn& y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("pearson: column lengths differ (" + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()) + ")");
    }
    const auto& k = kernels::active_kernels();
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const std::int64_t sum_x = static_cast<std::int64_t>(k.popcount_words(x.data(), x.word_count()));
    const std::int64_t sum_y = static_cast<std::int64_t>(k.popcount_words(y.data(), y.word_count()));
    const std::int64_t sum_xy =
        static_cast<std::int64_t>(k.and_popcount(x.data(), y.data(), x.word_count()));

    // For binary scores sum(X^2) == sum(X), so the variance terms collapse to
    // ones(x) * zeros(x).
    const std::int64_t var_x = n * sum_x - sum_x * sum_x;
    const std::int64_t var_y = n * sum_y - sum_y * sum_y;
    if (var_x == 0) {
        throw DegenerateVariance("pearson: first column is constant (all " +
                                 std::string(sum_x == 0 ? "zeros" : "ones") + ")");
    }
    if (var_y == 0) {
        throw DegenerateVariance("pearson: second column is constant (all " +
                                 std::string(sum_y == 0 ? "zeros" : "ones") + ")");
    }
    const std::int64_t numerator = n * sum_xy - sum_x * sum_y;
    return static_cast<double>(numerator) /
           std::sqrt(static_cast<double>(var_x) * static_cast<double>(var_y));
}

double pearson(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("pearson: column lengths differ (" + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()) + ")");
    }
    BitColumn bx(x.size()), by(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        bx.set(i, x[i] != 0);
        by.set(i, y[i] != 0);
    }
    return pearson(bx, by);
}

namespace {

CorrelationGraph weigh_pairs(const ResponseMatrix& matrix,
                             const std::vector<AttributeId>& nodes,
                             const std::vector<std::pair<AttributeId, AttributeId>>& pairs,
                             std::vector<std::string>* warnings) {
    CorrelationGraph graph;
    graph.nodes = nodes;
    for (auto [u, v] : pairs) {
        try {
            const double w = pearson(matrix.column(u), matrix.column(v));
            graph.edges.push_back(WeightedEdge{u, v, w});
        } catch (const DegenerateVariance&) {
            const std::string message = "correlation undefined for {" + matrix.name(u) + ", " +
                                        matrix.name(v) + "}: a constant column has no variance";
            if (warnings == nullptr) throw DegenerateVariance(message);
            warnings->push_back(message);
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  if (a.u != b.u) return a.u < b.u;
                  return a.v < b.v;
              });
    return graph;
}

}  // namespace

CorrelationGraph build_correlation_graph(const ResponseMatrix& matrix,
                                         const RequirementMatrix& reqmatrix,
                                         std::vector<std::string>* warnings) {
    std::vector<std::pair<AttributeId, AttributeId>> pairs;
    const auto& reqs = reqmatrix.requirements();
    for (std::size_t i = 0; i < reqs.size(); ++i) {
        for (std::size_t j = i + 1; j < reqs.size(); ++j) {
            if (reqmatrix.at(i, j) || reqmatrix.at(j, i)) {
                pairs.emplace_back(std::min(reqs[i], reqs[j]), std::max(reqs[i], reqs[j]));
            }
        }
    }
    return weigh_pairs(matrix, reqs, pairs, warnings);
}

CorrelationGraph complete_correlation_graph(const ResponseMatrix& matrix,
                                            const std::vector<AttributeId>& requirements,
                                            std::vector<std::string>* warnings) {
    std::vector<std::pair<AttributeId, AttributeId>> pairs;
    for (std::size_t i = 0; i < requirements.size(); ++i) {
        for (std::size_t j = i + 1; j < requirements.size(); ++j) {
            pairs.emplace_back(std::min(requirements[i], requirements[j]),
                               std::max(requirements[i], requirements[j]));
        }
    }
    return weigh_pairs(matrix, requirements, pairs, warnings);
}

}  // namespace reqmine
