#include "flocksim/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "flocksim/metrics.hpp"

namespace flocksim {

SwarmState step(const SwarmState& state, const ControlAction& action, double sampling_time) {
    if (static_cast<int>(action.size()) != state.size())
        throw SimError("step: action length " + std::to_string(action.size()) +
                       " does not match swarm size " + std::to_string(state.size()));
    if (!(sampling_time > 0.0)) throw SimError("step: sampling_time must be > 0");

    const double t = sampling_time;
    const double half_t_sq = 0.5 * t * t;

    SwarmState next = state;
    for (int i = 0; i < state.size(); ++i) {
        if (!action[i].finite()) throw SimError("step: non-finite control action");
        AgentState& a = next.agents[i];
        a.position += a.velocity * t + action[i] * half_t_sq;
        a.velocity += action[i] * t;
        if (!a.position.finite() || !a.velocity.finite())
            throw SimError("step: non-finite state after update (diverging dynamics)");
    }
    next.step_index = state.step_index + 1;
    return next;
}

namespace {

void write_trajectory_line(std::ostream& out, int step, const SwarmState& state,
                           double cost_term, Connectivity conn) {
    nlohmann::json j;
    j["step"] = step;
    auto& pos = j["positions"] = nlohmann::json::array();
    auto& vel = j["velocities"] = nlohmann::json::array();
    for (const AgentState& a : state.agents) {
        pos.push_back({a.position.x, a.position.y});
        vel.push_back({a.velocity.x, a.velocity.y});
    }
    j["cost_term"] = cost_term;
    j["isolated_count"] = conn.isolated_count;
    j["component_count"] = conn.component_count;
    out << j.dump() << '\n';
}

}  // namespace

EpisodeRecord run_episode(const SimParams& params, const std::string& controller_name,
                          const RunOptions& options) {
    params.validate();
    const auto controller = make_controller(controller_name);

    std::vector<int> score_steps = options.score_steps;
    if (options.sample_all_scores) {
        score_steps.resize(params.n_steps);
        for (int n = 0; n < params.n_steps; ++n) score_steps[n] = n;
    } else if (score_steps.empty()) {
        score_steps = {0, params.n_steps / 2, params.n_steps - 1};
    }
    std::sort(score_steps.begin(), score_steps.end());
    score_steps.erase(std::unique(score_steps.begin(), score_steps.end()), score_steps.end());

    const double lambda =
        params.lambda_override ? *params.lambda_override : default_lambda(params.n_agents, false);

    EpisodeRecord record;
    record.params = params;
    record.controller = controller_name;
    record.per_step_cost_terms.reserve(params.n_steps);
    record.connectivity_history.reserve(params.n_steps);

    SwarmState state = init_swarm(params);
    record.initial_state_hash = state_hash(state);
    NeighborGraph graph = build_graph_grid(state, params.comm_radius);

    auto next_sample = score_steps.begin();
    for (int n = 0; n < params.n_steps; ++n) {
        try {
            ConfScores scores;
            bool have_scores = false;
            if (next_sample != score_steps.end() && *next_sample == n) {
                ++next_sample;
                scores = compute_confscores(state, graph);
                have_scores = true;
                ScoreSample sample;
                sample.step = n;
                sample.positions.reserve(state.agents.size());
                for (const AgentState& a : state.agents) sample.positions.push_back(a.position);
                sample.scores = scores;
                sample.normalized = normalize_scores_for_export(scores);
                record.score_history.push_back(std::move(sample));
            }

            ControlAction action = controller->compute(state, graph);
            if (params.aux_enabled) {
                if (!have_scores) scores = compute_confscores(state, graph);
                action = compose(
                    action, assistant_acceleration(state, graph, scores, params.top_k, lambda));
            }

            state = step(state, action, params.sampling_time);
            graph = build_graph_grid(state, params.comm_radius);
        } catch (const EpisodeError&) {
            throw;
        } catch (const SimError& e) {
            throw EpisodeError(n, e.what());
        }

        const double cost_term = velocity_variance_term(state);
        const Connectivity conn = connectivity_of(graph);
        record.per_step_cost_terms.push_back(cost_term);
        record.connectivity_history.push_back(conn);
        if (options.trajectory_stream)
            write_trajectory_line(*options.trajectory_stream, state.step_index, state, cost_term,
                                  conn);
    }

    record.final_state = std::move(state);
    return record;
}

void write_scores_csv(const std::vector<ScoreSample>& samples, std::ostream& out) {
    out << "step,agent_id,pos_x,pos_y,score,score_normalized\n";
    char buf[128];
    for (const ScoreSample& s : samples) {
        for (std::size_t i = 0; i < s.scores.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%d,%zu,%.9g,%.9g,%.9g,%.9g\n", s.step, i,
                          s.positions[i].x, s.positions[i].y, s.scores[i], s.normalized[i]);
            out << buf;
        }
    }
}

}  // namespace flocksim
