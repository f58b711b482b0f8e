#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "reqmine/mst.hpp"
#include "reqmine/union_find.hpp"

using namespace reqmine;

namespace {

CorrelationGraph graph_of(std::size_t n,
                          const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges) {
    CorrelationGraph g;
    for (std::uint32_t i = 0; i < n; ++i) g.nodes.push_back(AttributeId{i});
    for (auto [u, v, w] : edges) g.edges.push_back(WeightedEdge{AttributeId{u}, AttributeId{v}, w});
    return g;
}

std::vector<oracles::Edge> to_oracle_edges(const CorrelationGraph& g) {
    std::vector<oracles::Edge> edges;
    for (const WeightedEdge& e : g.edges) {
        edges.push_back(oracles::Edge{e.u.index, e.v.index, e.weight});
    }
    return edges;
}

// Random graph over n nodes, connected by construction: a random tree plus
// extra random edges, weights in [-1, 1].
CorrelationGraph random_connected_graph(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    std::set<std::pair<std::uint32_t, std::uint32_t>> used;
    CorrelationGraph g;
    for (std::uint32_t i = 0; i < n; ++i) g.nodes.push_back(AttributeId{i});
    for (std::uint32_t v = 1; v < n; ++v) {
        const std::uint32_t u = rng() % v;
        used.insert({u, v});
        g.edges.push_back(WeightedEdge{AttributeId{u}, AttributeId{v}, weight(rng)});
    }
    const std::size_t extra = rng() % (n * 2 + 1);
    for (std::size_t t = 0; t < extra; ++t) {
        std::uint32_t u = rng() % n;
        std::uint32_t v = rng() % n;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        g.edges.push_back(WeightedEdge{AttributeId{u}, AttributeId{v}, weight(rng)});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return g;
}

void check_forest_shape(const CorrelationGraph& g, const SpanningForest& forest) {
    CHECK(forest.edges.size() + forest.component_count == forest.nodes.size());
    DisjointSetUnion dsu(g.nodes.size());
    for (const WeightedEdge& e : forest.edges) {
        CHECK(dsu.unite(e.u.index, e.v.index));  // false would mean a cycle
    }
}

}  // namespace

TEST_CASE("maximum_spanning_forest worked examples") {
    SUBCASE("single node") {
        const SpanningForest f = maximum_spanning_forest(graph_of(1, {}));
        CHECK(f.edges.empty());
        CHECK(f.total_weight == 0.0);
        CHECK(f.component_count == 1);
    }
    SUBCASE("four nodes, best tree skips the cycle edge") {
        const CorrelationGraph g =
            graph_of(4, {{0, 1, 0.9}, {0, 2, 0.8}, {1, 2, 0.5}, {2, 3, 0.3}});
        const SpanningForest f = maximum_spanning_forest(g);
        REQUIRE(f.edges.size() == 3);
        CHECK(f.edges[0].weight == 0.9);
        CHECK(f.edges[1].weight == 0.8);
        CHECK(f.edges[2].weight == 0.3);
        CHECK(f.total_weight == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(f.component_count == 1);
    }
    SUBCASE("disconnected input yields a forest") {
        const CorrelationGraph g = graph_of(4, {{0, 1, 0.5}, {2, 3, 0.4}});
        const SpanningForest f = maximum_spanning_forest(g);
        CHECK(f.edges.size() == 2);
        CHECK(f.component_count == 2);
    }
    SUBCASE("negative weights are kept when they are the only connection") {
        const CorrelationGraph g = graph_of(2, {{0, 1, -0.2}});
        const SpanningForest f = maximum_spanning_forest(g);
        REQUIRE(f.edges.size() == 1);
        CHECK(f.total_weight == -0.2);
    }
}

TEST_CASE("total_weight") {
    SpanningForest f;
    CHECK(total_weight(f) == 0.0);
    f.edges = {WeightedEdge{AttributeId{0}, AttributeId{1}, 0.9},
               WeightedEdge{AttributeId{0}, AttributeId{2}, 0.8},
               WeightedEdge{AttributeId{2}, AttributeId{3}, 0.3}};
    CHECK(total_weight(f) == doctest::Approx(2.0).epsilon(1e-12));
    f.edges = {WeightedEdge{AttributeId{0}, AttributeId{1}, -0.2}};
    CHECK(total_weight(f) == -0.2);
}

TEST_CASE("optimality against exhaustive search on small graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 6;  // up to 7 nodes
        const CorrelationGraph g = random_connected_graph(rng, n);
        const SpanningForest f = maximum_spanning_forest(g);
        check_forest_shape(g, f);
        CHECK(f.component_count == 1);
        const double best = oracles::brute_force_max_spanning_tree(n, to_oracle_edges(g));
        CHECK(f.total_weight == doctest::Approx(best).epsilon(1e-9));
        CHECK(total_weight(f) == doctest::Approx(f.total_weight).epsilon(1e-9));
    }
}

TEST_CASE("negation duality with identical tie-breaking") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        CorrelationGraph g = random_connected_graph(rng, n);
        // Inject ties to make the tie-break path do real work.
        for (WeightedEdge& e : g.edges) {
            if (rng() % 3 == 0) e.weight = 0.25;
        }
        const SpanningForest f = maximum_spanning_forest(g);

        std::vector<oracles::Edge> negated = to_oracle_edges(g);
        for (oracles::Edge& e : negated) e.weight = -e.weight;
        const std::vector<std::size_t> min_selected =
            oracles::min_kruskal_on_negated(n, negated);

        REQUIRE(min_selected.size() == f.edges.size());
        for (std::size_t i = 0; i < min_selected.size(); ++i) {
            const WeightedEdge& expected = g.edges[min_selected[i]];
            CHECK(f.edges[i] == expected);
        }
    }
}

TEST_CASE("determinism under ties") {
    CorrelationGraph g = graph_of(4, {{0, 1, 0.5}, {0, 2, 0.5}, {0, 3, 0.5},
                                      {1, 2, 0.5}, {1, 3, 0.5}, {2, 3, 0.5}});
    const SpanningForest first = maximum_spanning_forest(g);
    const SpanningForest second = maximum_spanning_forest(g);
    CHECK(first.edges == second.edges);
    // ascending (u, v) among equal weights
    REQUIRE(first.edges.size() == 3);
    CHECK(first.edges[0] == WeightedEdge{AttributeId{0}, AttributeId{1}, 0.5});
    CHECK(first.edges[1] == WeightedEdge{AttributeId{0}, AttributeId{2}, 0.5});
    CHECK(first.edges[2] == WeightedEdge{AttributeId{0}, AttributeId{3}, 0.5});
}

TEST_CASE("exactly one simple path between any two nodes of a component") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const CorrelationGraph g = random_connected_graph(rng, n);
        const SpanningForest f = maximum_spanning_forest(g);
        const std::vector<oracles::Edge> tree = to_oracle_edges({f.nodes, f.edges});
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                CHECK(oracles::count_simple_paths(n, tree, a, b) == 1);
            }
        }
    }
}

TEST_CASE("union-find: find is idempotent and unions merge") {
    DisjointSetUnion dsu(6);
    CHECK(dsu.component_count() == 6);
    CHECK(dsu.unite(0, 1));
    CHECK(dsu.unite(1, 2));
    CHECK(!dsu.unite(0, 2));
    CHECK(dsu.find(2) == dsu.find(0));
    CHECK(dsu.find(2) == dsu.find(dsu.find(2)));
    CHECK(dsu.component_count() == 4);
    CHECK(!dsu.connected(0, 5));
}
