#pragma once

#include <vector>

#include "flocksim/core.hpp"
#include "flocksim/graph.hpp"

namespace flocksim {

/// Per-agent confidence scores. scores[i] sums the cosine similarity between
/// agent i's velocity and each neighbor's velocity, so -degree(i) <= scores[i]
/// <= degree(i), and an isolated agent scores 0.
using ConfScores = std::vector<double>;

/// Velocities shorter than this contribute 0 to every cosine term they appear
/// in (the cosine is undefined at zero speed; a stationary agent carries no
/// heading information).
inline constexpr double kVelocityEpsilon = 1e-9;  // m/s

ConfScores compute_confscores(const SwarmState& state, const NeighborGraph& graph);

/// The min(k, degree) neighbors of `agent` with the highest scores, ordered by
/// score descending; ties broken by lower agent index first.
std::vector<int> top_k_by_score(const NeighborGraph& graph, const ConfScores& scores,
                                int agent, int k);

/// Assistant acceleration: each agent averages lambda * (C_j - C_i) * (v_j - v_i)
/// over the neighbors among its top-k whose score is strictly higher than its
/// own. No qualifying neighbor means zero acceleration. The sum runs in
/// ascending neighbor-index order so results are reproducible bit for bit.
ControlAction assistant_acceleration(const SwarmState& state, const NeighborGraph& graph,
                                     const ConfScores& scores, int k, double lambda);

/// Heuristic follow-the-leader gain: 30/N, or 15/N when the base controller is
/// learning-based.
double default_lambda(int n_agents, bool learning_based);

/// Min-max normalization of the scores across the swarm into [0, 1] for
/// plotting; an all-equal score vector maps to all 0.5.
std::vector<double> normalize_scores_for_export(const ConfScores& scores);

}  // namespace flocksim
