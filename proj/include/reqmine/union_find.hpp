#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace reqmine {

// Disjoint set union with path compression and union by rank.
class DisjointSetUnion {
public:
    explicit DisjointSetUnion(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // halve the path
            x = parent_[x];
        }
        return x;
    }

    // Returns false when a and b were already in the same set.
    bool unite(std::size_t a, std::size_t b) {
        std::size_t ra = find(a);
        std::size_t rb = find(b);
        if (ra == rb) return false;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }

    bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }

    std::size_t component_count() {
        std::size_t roots = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            if (find(i) == i) ++roots;
        }
        return roots;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

}  // namespace reqmine
