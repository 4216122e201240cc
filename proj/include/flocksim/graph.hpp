#pragma once

#include <numeric>
#include <vector>

#include "flocksim/core.hpp"

namespace flocksim {

/// Radius-limited communication graph. neighbors[i] lists the agents within
/// comm_radius of agent i, sorted ascending. Symmetric and irreflexive.
struct NeighborGraph {
    std::vector<std::vector<int>> neighbors;

    int size() const { return static_cast<int>(neighbors.size()); }
    int degree(int i) const { return static_cast<int>(neighbors[i].size()); }
    bool operator==(const NeighborGraph&) const = default;
};

/// Reference O(N^2) pair scan. Boundary is inclusive: distance == comm_radius
/// counts as a neighbor. Comparison is done on squared distances.
NeighborGraph build_graph_bruteforce(const SwarmState& state, double comm_radius);

/// Uniform-grid spatial hash with cell size = comm_radius; candidate pairs
/// come from the 3x3 cell neighborhood and pass the same exact squared
/// distance check. Output is identical to build_graph_bruteforce on every
/// input.
NeighborGraph build_graph_grid(const SwarmState& state, double comm_radius);

/// Disjoint sets over agent indices, path halving + union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

struct Connectivity {
    int isolated_count = 0;    // agents with no neighbors
    int component_count = 0;   // connected components (isolated agents count)

    bool operator==(const Connectivity&) const = default;
};

Connectivity connectivity_of(const NeighborGraph& graph);

}  // namespace flocksim
