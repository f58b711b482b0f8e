#include "reqmine/mst.hpp"

#include <algorithm>
#include <map>

#include "reqmine/errors.hpp"
#include "reqmine/union_find.hpp"

namespace reqmine {

SpanningForest maximum_spanning_forest(const CorrelationGraph& graph) {
    SpanningForest forest;
    forest.nodes = graph.nodes;

    std::map<AttributeId, std::size_t> position;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) position[graph.nodes[i]] = i;

    std::vector<WeightedEdge> order = graph.edges;
    std::sort(order.begin(), order.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    DisjointSetUnion dsu(graph.nodes.size());
    for (const WeightedEdge& edge : order) {
        const auto u = position.find(edge.u);
        const auto v = position.find(edge.v);
        if (u == position.end() || v == position.end()) {
            throw InternalError("spanning forest: edge endpoint is not a graph node");
        }
        if (dsu.unite(u->second, v->second)) {
            forest.edges.push_back(edge);
            forest.total_weight += edge.weight;
        }
    }
    forest.component_count = graph.nodes.empty() ? 0 : dsu.component_count();
    return forest;
}

double total_weight(const SpanningForest& forest) {
    double sum = 0.0;
    for (const WeightedEdge& edge : forest.edges) sum += edge.weight;
    return sum;
}

}  // namespace reqmine
