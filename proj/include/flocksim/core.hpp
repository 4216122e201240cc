#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flocksim {

// Error hierarchy. Everything the library throws derives from SimError so
// callers (the sweep runner in particular) can catch one type and keep going.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling ran out of attempts (box too dense for the separation).
struct InitError : SimError {
    using SimError::SimError;
};

// Two agents exactly coincident where a pairwise interaction is undefined.
struct DegenerateInputError : SimError {
    using SimError::SimError;
};

// Bad configuration values or malformed config documents.
struct ConfigError : SimError {
    using SimError::SimError;
};

/// 2D vector, used for positions (m), velocities (m/s) and accelerations (m/s^2).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    bool operator==(const Vec2&) const = default;

    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::sqrt(x * x + y * y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct AgentState {
    Vec2 position;
    Vec2 velocity;

    bool operator==(const AgentState&) const = default;
};

/// All agent states plus the discrete time index. Agent identity is the index
/// into `agents`; the order is fixed for a whole episode.
struct SwarmState {
    std::vector<AgentState> agents;
    int step_index = 0;

    int size() const { return static_cast<int>(agents.size()); }
    bool operator==(const SwarmState&) const = default;
};

/// Per-agent acceleration vectors, same length and order as SwarmState.agents.
using ControlAction = std::vector<Vec2>;

/// Simulation parameters. Field names match the JSON config schema exactly.
struct SimParams {
    int n_agents = 100;
    double comm_radius = 1.0;        // m
    double v_max = 3.5;              // m/s, maximum initial speed
    double sampling_time = 0.01;     // s
    int n_steps = 500;
    int top_k = 3;
    std::optional<double> lambda_override;  // absent -> 30 / n_agents
    bool aux_enabled = false;
    std::uint64_t seed = 1;
    double init_min_separation = 0.1;        // m
    std::optional<double> init_box_side;     // m; absent -> sqrt(n_agents)

    /// Side of the initialization square; defaults to sqrt(N) so the mean
    /// agent density is 1 per square meter at any swarm size.
    double box_side() const {
        return init_box_side ? *init_box_side : std::sqrt(static_cast<double>(n_agents));
    }

    /// Throws ConfigError if any invariant is violated.
    void validate() const;
};

/// SplitMix64 (Vigna's published constants). Used instead of <random> engines
/// plus distributions because distribution sampling is implementation-defined;
/// this keeps identical seeds bit-identical across compilers and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t state_;
};

/// Seeded initial state: positions uniform in [0, box_side]^2 with pairwise
/// separation >= init_min_separation (rejection sampling), velocities uniform
/// in the closed disk of radius v_max. Pure function of params.
/// Throws InitError when the attempt budget runs out.
SwarmState init_swarm(const SimParams& params);

/// FNV-1a over the raw bytes of all positions and velocities plus step_index.
/// Used to verify that paired A/B runs really share one initial state.
std::uint64_t state_hash(const SwarmState& state);

}  // namespace flocksim
