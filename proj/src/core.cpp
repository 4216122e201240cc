#include "flocksim/core.hpp"

#include <cstring>

namespace flocksim {

namespace {

// Total candidate draws allowed across all agents before init gives up.
constexpr std::int64_t kInitAttemptsPerAgent = 10000;

std::uint64_t fnv1a_append(std::uint64_t hash, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x00000100000001B3ull;
    }
    return hash;
}

}  // namespace

void SimParams::validate() const {
    if (n_agents < 2) throw ConfigError("n_agents must be >= 2");
    if (!(comm_radius > 0.0)) throw ConfigError("comm_radius must be > 0");
    if (!(v_max >= 0.0)) throw ConfigError("v_max must be >= 0");
    if (!(sampling_time > 0.0)) throw ConfigError("sampling_time must be > 0");
    if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
    if (top_k < 1) throw ConfigError("top_k must be >= 1");
    if (lambda_override && !(*lambda_override >= 0.0))
        throw ConfigError("lambda_override must be >= 0");
    if (!(init_min_separation > 0.0)) throw ConfigError("init_min_separation must be > 0");
    if (!(box_side() > 0.0)) throw ConfigError("init_box_side must be > 0");
    if (!(init_min_separation < box_side()))
        throw ConfigError("init_min_separation must be < init_box_side");
}

SwarmState init_swarm(const SimParams& params) {
    params.validate();

    const int n = params.n_agents;
    const double box = params.box_side();
    const double sep_sq = params.init_min_separation * params.init_min_separation;
    const std::int64_t attempt_budget = kInitAttemptsPerAgent * n;

    SplitMix64 rng(params.seed);
    SwarmState state;
    state.agents.resize(n);
    state.step_index = 0;

    std::int64_t attempts = 0;
    for (int i = 0; i < n; ++i) {
        for (;;) {
            if (attempts++ >= attempt_budget)
                throw InitError("init_swarm: separation rejection sampling exceeded " +
                                std::to_string(attempt_budget) +
                                " attempts (box too dense for init_min_separation)");
            Vec2 p{rng.next_in(0.0, box), rng.next_in(0.0, box)};
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if ((p - state.agents[j].position).norm_sq() < sep_sq) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                state.agents[i].position = p;
                break;
            }
        }
    }

    // Velocities: rejection from the bounding square onto the closed disk.
    // v_max = 0 accepts (0, 0) on the first draw.
    const double v = params.v_max;
    const double v_sq = v * v;
    for (int i = 0; i < n; ++i) {
        for (;;) {
            Vec2 vel{rng.next_in(-v, v), rng.next_in(-v, v)};
            if (vel.norm_sq() <= v_sq) {
                state.agents[i].velocity = vel;
                break;
            }
        }
    }

    return state;
}

std::uint64_t state_hash(const SwarmState& state) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const AgentState& a : state.agents) {
        double vals[4] = {a.position.x, a.position.y, a.velocity.x, a.velocity.y};
        h = fnv1a_append(h, vals, sizeof vals);
    }
    h = fnv1a_append(h, &state.step_index, sizeof state.step_index);
    return h;
}

}  // namespace flocksim
