#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flocksim/core.hpp"
#include "flocksim/graph.hpp"

namespace flocksim {

// Inter-agent potential: U(r) = 1/|r|^2 + log |r|^2, minimized at |r| = 1 m,
// unbounded at 0. Near-collision safeguards, tunable:
inline constexpr double kPotentialMinDistance = 0.01;   // m; evaluation radius floor
inline constexpr double kPotentialMaxGradient = 250.0;  // m/s^2; gradient magnitude cap

/// Gradient of U at displacement r = p_i - p_j: (-2/|r|^4 + 2/|r|^2) * r.
/// |r| is clamped below at kPotentialMinDistance before evaluation and the
/// result magnitude is capped at kPotentialMaxGradient. Throws
/// DegenerateInputError for |r| == 0 (coincident agents).
Vec2 potential_gradient(Vec2 r);

/// Velocity alignment plus potential descent over the radius-limited
/// neighborhood: u_i = -sum_j (v_i - v_j) - sum_j grad U(p_i - p_j).
/// Agents with no neighbors get zero control and coast.
ControlAction flocking_local(const SwarmState& state, const NeighborGraph& graph);

/// Same control law summed over all other agents, regardless of radius.
ControlAction flocking_global(const SwarmState& state);

/// Elementwise sum of a base action and an auxiliary action.
ControlAction compose(const ControlAction& base, const ControlAction& aux);

/// A control policy: maps the swarm state (and its communication graph) to
/// one acceleration per agent. Implementations must be deterministic.
class Controller {
public:
    virtual ~Controller() = default;
    virtual ControlAction compute(const SwarmState& state, const NeighborGraph& graph) const = 0;
    virtual const std::string& name() const = 0;
};

/// Factory for the registered controllers: "local", "global", and "none"
/// (ballistic drift, zero control). Throws ConfigError on unknown names.
std::unique_ptr<Controller> make_controller(const std::string& name);

/// Names accepted by make_controller.
const std::vector<std::string>& controller_names();

}  // namespace flocksim
