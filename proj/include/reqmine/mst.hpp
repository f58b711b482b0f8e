#pragma once

#include <cstddef>
#include <vector>

#include "reqmine/correlation.hpp"

namespace reqmine {

// Maximum-weight acyclic edge set spanning each connected component.
// Invariants: edges.size() == nodes.size() - component_count, and the edge
// set is cycle-free.
struct SpanningForest {
    std::vector<AttributeId> nodes;
    std::vector<WeightedEdge> edges;  // in selection order (descending weight)
    double total_weight = 0.0;
    std::size_t component_count = 0;
};

// Kruskal with edges taken in descending weight order, ties broken by
// ascending (u, v); an edge is kept iff its endpoints are in different
// components. Disconnected input yields a forest.
SpanningForest maximum_spanning_forest(const CorrelationGraph& graph);

double total_weight(const SpanningForest& forest);

}  // namespace reqmine
