#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flocksim/confscore.hpp"
#include "flocksim/controllers.hpp"
#include "flocksim/core.hpp"
#include "flocksim/graph.hpp"

namespace flocksim {

/// A controller or integration failure, tagged with the step it occurred at.
struct EpisodeError : SimError {
    EpisodeError(int step, const std::string& what)
        : SimError("step " + std::to_string(step) + ": " + what), step_index(step) {}
    int step_index;
};

/// Confidence scores sampled at one step, with the positions they were
/// computed at and their [0,1] min-max normalization (the score-dump CSV rows).
struct ScoreSample {
    int step = 0;
    std::vector<Vec2> positions;
    ConfScores scores;
    std::vector<double> normalized;
};

/// Everything one episode produces. per_step_cost_terms[n] and
/// connectivity_history[n] describe the state after update n+1, so the last
/// entries describe the final state; the initial state does not contribute.
struct EpisodeRecord {
    SimParams params;
    std::string controller;
    std::vector<double> per_step_cost_terms;
    SwarmState final_state;
    std::vector<ScoreSample> score_history;
    std::vector<Connectivity> connectivity_history;
    std::uint64_t initial_state_hash = 0;
};

struct RunOptions {
    /// Steps at which to sample confidence scores (states before those update
    /// steps). Empty means the default {0, n_steps/2, n_steps-1}.
    std::vector<int> score_steps;
    /// Sample scores at every step instead (full dump).
    bool sample_all_scores = false;
    /// When set, one JSON object per recorded step is written here (JSON
    /// Lines: step, positions, velocities, cost_term, isolated_count,
    /// component_count).
    std::ostream* trajectory_stream = nullptr;
};

/// Exact zero-order-hold double-integrator update over one sampling interval:
/// p' = p + v*T + u*T^2/2, v' = v + u*T. Throws SimError on a non-finite
/// action or when the update produces a non-finite state.
SwarmState step(const SwarmState& state, const ControlAction& action, double sampling_time);

/// Full episode rollout. Per iteration on state n: build graph, sample scores
/// if requested, base action from the controller, auxiliary action composed in
/// when params.aux_enabled (gain = lambda_override or 30/N, using params.top_k),
/// integrate, then record the cost term and connectivity of state n+1.
/// Deterministic given params. Errors are rethrown as EpisodeError.
EpisodeRecord run_episode(const SimParams& params, const std::string& controller_name,
                          const RunOptions& options = {});

/// Score-dump CSV: header plus one row per agent per sampled step, columns
/// step, agent_id, pos_x, pos_y, score, score_normalized.
void write_scores_csv(const std::vector<ScoreSample>& samples, std::ostream& out);

}  // namespace flocksim
