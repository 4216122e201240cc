#include "flocksim/metrics.hpp"

namespace flocksim {

double velocity_variance_term(const SwarmState& state) {
    const int n = state.size();
    if (n < 1) throw SimError("velocity_variance_term: empty swarm");

    Vec2 sum{};
    for (const AgentState& a : state.agents) sum += a.velocity;
    const Vec2 mean = sum * (1.0 / n);

    double acc = 0.0;
    for (const AgentState& a : state.agents) acc += (a.velocity - mean).norm_sq();
    return acc / n;
}

CostSummary episode_cost(const EpisodeRecord& record) {
    if (record.per_step_cost_terms.empty() || record.connectivity_history.empty())
        throw SimError("episode_cost: record has no recorded steps");

    CostSummary summary;
    for (double term : record.per_step_cost_terms) summary.total_cost += term;
    summary.initial_step_cost = record.per_step_cost_terms.front();
    summary.final_step_cost = record.per_step_cost_terms.back();
    summary.isolated_at_end = record.connectivity_history.back().isolated_count;
    summary.components_at_end = record.connectivity_history.back().component_count;
    return summary;
}

}  // namespace flocksim
