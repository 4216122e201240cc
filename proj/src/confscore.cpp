#include "flocksim/confscore.hpp"

#include <algorithm>

namespace flocksim {

ConfScores compute_confscores(const SwarmState& state, const NeighborGraph& graph) {
    const int n = state.size();
    ConfScores scores(n, 0.0);

    for (int i = 0; i < n; ++i) {
        const Vec2 vi = state.agents[i].velocity;
        const double ni = vi.norm();
        if (ni < kVelocityEpsilon) continue;  // every term of agent i is 0
        double c = 0.0;
        for (int j : graph.neighbors[i]) {
            const Vec2 vj = state.agents[j].velocity;
            const double nj = vj.norm();
            if (nj < kVelocityEpsilon) continue;
            c += dot(vi, vj) / (ni * nj);
        }
        scores[i] = c;
    }
    return scores;
}

std::vector<int> top_k_by_score(const NeighborGraph& graph, const ConfScores& scores,
                                int agent, int k) {
    std::vector<int> ranked = graph.neighbors[agent];
    // Neighbor lists are ascending, so a stable sort by score leaves ties in
    // lower-index-first order.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&scores](int a, int b) { return scores[a] > scores[b]; });
    if (static_cast<int>(ranked.size()) > k) ranked.resize(k);
    return ranked;
}

ControlAction assistant_acceleration(const SwarmState& state, const NeighborGraph& graph,
                                     const ConfScores& scores, int k, double lambda) {
    const int n = state.size();
    ControlAction accel(n, Vec2{});
    std::vector<char> in_top(n, 0);

    for (int i = 0; i < n; ++i) {
        const std::vector<int> top = top_k_by_score(graph, scores, i, k);
        for (int j : top) in_top[j] = 1;

        double ux = 0.0;
        double uy = 0.0;
        int count = 0;
        // Ascending index order; membership and the strict score gate decide.
        for (int j : graph.neighbors[i]) {
            if (!in_top[j] || !(scores[j] > scores[i])) continue;
            const double w = lambda * (scores[j] - scores[i]);
            ux += w * (state.agents[j].velocity.x - state.agents[i].velocity.x);
            uy += w * (state.agents[j].velocity.y - state.agents[i].velocity.y);
            ++count;
        }
        if (count > 0) accel[i] = Vec2{ux / count, uy / count};

        for (int j : top) in_top[j] = 0;
    }
    return accel;
}

double default_lambda(int n_agents, bool learning_based) {
    return (learning_based ? 15.0 : 30.0) / static_cast<double>(n_agents);
}

std::vector<double> normalize_scores_for_export(const ConfScores& scores) {
    const auto [lo_it, hi_it] = std::minmax_element(scores.begin(), scores.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> out(scores.size());
    if (hi == lo) {
        std::fill(out.begin(), out.end(), 0.5);
        return out;
    }
    const double range = hi - lo;
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - lo) / range;
    return out;
}

}  // namespace flocksim
