#pragma once

#include "flocksim/core.hpp"
#include "flocksim/sim.hpp"

namespace flocksim {

struct CostSummary {
    double total_cost = 0.0;        // sum of per-step velocity variance terms
    double initial_step_cost = 0.0; // term after the first update
    double final_step_cost = 0.0;   // term after the last update
    int isolated_at_end = 0;
    int components_at_end = 0;
};

/// One step's cost term: (1/N) * sum_j |v_j - v_mean|^2.
double velocity_variance_term(const SwarmState& state);

/// Sums the recorded per-step terms into the episode cost and pulls the
/// first/last terms and final connectivity out of the record.
CostSummary episode_cost(const EpisodeRecord& record);

}  // namespace flocksim
