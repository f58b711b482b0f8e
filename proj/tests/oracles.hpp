#pragma once

// Test-only reference implementations, deliberately independent of the
// library's counting kernels and mining/selection code paths. They favor
// directness over speed: row-by-row scans, full itemset enumeration, and
// exhaustive spanning-tree search.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

namespace oracles {

using Rows = std::vector<std::vector<std::uint8_t>>;

inline std::uint64_t count_rows_containing(const Rows& rows,
                                           const std::vector<std::uint32_t>& items) {
    std::uint64_t count = 0;
    for (const auto& row : rows) {
        bool all = true;
        for (std::uint32_t item : items) {
            if (row[item] == 0) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }
    return count;
}

// Every non-empty itemset of size <= max_len with count/N >= min_support,
// found by enumerating all 2^M - 1 subsets of the attribute set.
inline std::map<std::vector<std::uint32_t>, std::uint64_t> brute_force_frequent(
    const Rows& rows, std::size_t attribute_count, double min_support, std::size_t max_len) {
    std::map<std::vector<std::uint32_t>, std::uint64_t> frequent;
    const double n = static_cast<double>(rows.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << attribute_count); ++mask) {
        std::vector<std::uint32_t> items;
        for (std::uint32_t j = 0; j < attribute_count; ++j) {
            if (mask & (std::uint64_t{1} << j)) items.push_back(j);
        }
        if (items.size() > max_len) continue;
        const std::uint64_t count = count_rows_containing(rows, items);
        if (static_cast<double>(count) / n >= min_support) frequent[items] = count;
    }
    return frequent;
}

// Pearson r from the mean-centered covariance form, all in double.
inline double mean_centered_pearson(const std::vector<std::uint8_t>& x,
                                    const std::vector<std::uint8_t>& y) {
    const double n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 0.0;
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
}

}  // namespace detail

// Maximum total weight over every spanning tree, by trying all edge subsets
// of size n-1 and keeping the acyclic connected ones. Requires a connected
// input graph.
inline double brute_force_max_spanning_tree(std::size_t n, const std::vector<Edge>& edges) {
    const std::size_t need = n - 1;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), std::size_t{0});

    const auto evaluate = [&]() {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        double total = 0.0;
        for (std::size_t e : pick) {
            const std::size_t ru = detail::find_root(parent, edges[e].u);
            const std::size_t rv = detail::find_root(parent, edges[e].v);
            if (ru == rv) return;  // cycle
            parent[ru] = rv;
            total += edges[e].weight;
        }
        if (total > best) best = total;
    };

    if (need == 0) return 0.0;
    if (edges.size() < need) return best;
    while (true) {
        evaluate();
        // next combination
        std::size_t i = need;
        while (i > 0) {
            --i;
            if (pick[i] != i + edges.size() - need) break;
        }
        if (pick[i] == i + edges.size() - need) break;
        ++pick[i];
        for (std::size_t j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

// Kruskal for the MINIMUM spanning forest: ascending weight, ties by
// ascending (u, v). Returns the selected edge indices in selection order.
inline std::vector<std::size_t> min_kruskal_on_negated(std::size_t n,
                                                       const std::vector<Edge>& edges) {
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (edges[a].weight != edges[b].weight) return edges[a].weight < edges[b].weight;
        if (edges[a].u != edges[b].u) return edges[a].u < edges[b].u;
        return edges[a].v < edges[b].v;
    });
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<std::size_t> selected;
    for (std::size_t e : order) {
        const std::size_t ru = detail::find_root(parent, edges[e].u);
        const std::size_t rv = detail::find_root(parent, edges[e].v);
        if (ru != rv) {
            parent[ru] = rv;
            selected.push_back(e);
        }
    }
    return selected;
}

// Number of simple paths between two nodes in an undirected edge list.
inline std::size_t count_simple_paths(std::size_t n, const std::vector<Edge>& edges,
                                      std::size_t from, std::size_t to) {
    std::vector<std::vector<std::size_t>> adjacent(n);
    for (const Edge& e : edges) {
        adjacent[e.u].push_back(e.v);
        adjacent[e.v].push_back(e.u);
    }
    std::vector<bool> visited(n, false);
    std::size_t paths = 0;
    const std::function<void(std::size_t)> walk = [&](std::size_t at) {
        if (at == to) {
            ++paths;
            return;
        }
        visited[at] = true;
        for (std::size_t next : adjacent[at]) {
            if (!visited[next]) walk(next);
        }
        visited[at] = false;
    };
    walk(from);
    return paths;
}

}  // namespace oracles
