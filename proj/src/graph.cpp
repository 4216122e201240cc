#include "flocksim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace flocksim {

NeighborGraph build_graph_bruteforce(const SwarmState& state, double comm_radius) {
    if (!(comm_radius > 0.0)) throw ConfigError("comm_radius must be > 0");

    const int n = state.size();
    const double r_sq = comm_radius * comm_radius;
    NeighborGraph graph;
    graph.neighbors.resize(n);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d_sq = (state.agents[i].position - state.agents[j].position).norm_sq();
            if (d_sq <= r_sq) {
                graph.neighbors[i].push_back(j);
                graph.neighbors[j].push_back(i);
            }
        }
    }
    return graph;
}

namespace {

// Cell coordinate clamped to int32 range. Positions far enough out to clamp
// collapse into the boundary cell, which only widens the candidate set; the
// exact distance check keeps the result correct.
std::int64_t cell_coord(double v, double inv_cell) {
    const double c = std::floor(v * inv_cell);
    constexpr double kLim = 2147483647.0;
    if (c > kLim) return static_cast<std::int64_t>(kLim);
    if (c < -kLim) return -static_cast<std::int64_t>(kLim);
    return static_cast<std::int64_t>(c);
}

std::uint64_t pack_cell(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx + 2147483648ll) << 32) |
           static_cast<std::uint64_t>(cy + 2147483648ll);
}

}  // namespace

NeighborGraph build_graph_grid(const SwarmState& state, double comm_radius) {
    if (!(comm_radius > 0.0)) throw ConfigError("comm_radius must be > 0");

    const int n = state.size();
    const double r_sq = comm_radius * comm_radius;
    const double inv_cell = 1.0 / comm_radius;

    std::unordered_map<std::uint64_t, std::vector<int>> cells;
    cells.reserve(static_cast<std::size_t>(n) * 2);

    std::vector<std::int64_t> cx(n), cy(n);
    for (int i = 0; i < n; ++i) {
        cx[i] = cell_coord(state.agents[i].position.x, inv_cell);
        cy[i] = cell_coord(state.agents[i].position.y, inv_cell);
        cells[pack_cell(cx[i], cy[i])].push_back(i);
    }

    NeighborGraph graph;
    graph.neighbors.resize(n);

    for (int i = 0; i < n; ++i) {
        auto& out = graph.neighbors[i];
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells.find(pack_cell(cx[i] + dx, cy[i] + dy));
                if (it == cells.end()) continue;
                for (int j : it->second) {
                    if (j == i) continue;
                    const double d_sq =
                        (state.agents[i].position - state.agents[j].position).norm_sq();
                    if (d_sq <= r_sq) out.push_back(j);
                }
            }
        }
        std::sort(out.begin(), out.end());
    }
    return graph;
}

Connectivity connectivity_of(const NeighborGraph& graph) {
    const int n = graph.size();
    UnionFind uf(n);
    Connectivity conn;

    for (int i = 0; i < n; ++i) {
        if (graph.neighbors[i].empty()) ++conn.isolated_count;
        for (int j : graph.neighbors[i]) {
            if (j > i) uf.unite(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (uf.find(i) == i) ++conn.component_count;
    }
    return conn;
}

}  // namespace flocksim
