#include "flocksim/controllers.hpp"

#include <cmath>

namespace flocksim {

Vec2 potential_gradient(Vec2 r) {
    const double d_sq = r.norm_sq();
    if (d_sq == 0.0)
        throw DegenerateInputError("potential_gradient: coincident agents (|r| = 0)");

    const double d = std::sqrt(d_sq);
    Vec2 g;
    if (d < kPotentialMinDistance) {
        // Evaluate at the clamped radius along the same direction.
        const double dc = kPotentialMinDistance;
        const double coeff = -2.0 / (dc * dc * dc * dc) + 2.0 / (dc * dc);
        g = r * (coeff * (dc / d));
    } else {
        const double coeff = -2.0 / (d_sq * d_sq) + 2.0 / d_sq;
        g = r * coeff;
    }

    const double mag = g.norm();
    if (mag > kPotentialMaxGradient) g = g * (kPotentialMaxGradient / mag);
    return g;
}

namespace {

Vec2 pair_term(const AgentState& self, const AgentState& other) {
    const Vec2 align = self.velocity - other.velocity;
    const Vec2 grad = potential_gradient(self.position - other.position);
    return Vec2{-(align.x + grad.x), -(align.y + grad.y)};
}

}  // namespace

ControlAction flocking_local(const SwarmState& state, const NeighborGraph& graph) {
    const int n = state.size();
    ControlAction action(n, Vec2{});
    for (int i = 0; i < n; ++i) {
        Vec2 u{};
        for (int j : graph.neighbors[i]) u += pair_term(state.agents[i], state.agents[j]);
        action[i] = u;
    }
    return action;
}

ControlAction flocking_global(const SwarmState& state) {
    const int n = state.size();
    ControlAction action(n, Vec2{});
    for (int i = 0; i < n; ++i) {
        Vec2 u{};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            u += pair_term(state.agents[i], state.agents[j]);
        }
        action[i] = u;
    }
    return action;
}

ControlAction compose(const ControlAction& base, const ControlAction& aux) {
    if (base.size() != aux.size())
        throw SimError("compose: control action length mismatch (" +
                       std::to_string(base.size()) + " vs " + std::to_string(aux.size()) + ")");
    ControlAction out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + aux[i];
    return out;
}

namespace {

class LocalController final : public Controller {
public:
    ControlAction compute(const SwarmState& state, const NeighborGraph& graph) const override {
        return flocking_local(state, graph);
    }
    const std::string& name() const override {
        static const std::string n = "local";
        return n;
    }
};

class GlobalController final : public Controller {
public:
    ControlAction compute(const SwarmState& state, const NeighborGraph&) const override {
        return flocking_global(state);
    }
    const std::string& name() const override {
        static const std::string n = "global";
        return n;
    }
};

class NoneController final : public Controller {
public:
    ControlAction compute(const SwarmState& state, const NeighborGraph&) const override {
        return ControlAction(state.agents.size(), Vec2{});
    }
    const std::string& name() const override {
        static const std::string n = "none";
        return n;
    }
};

}  // namespace

std::unique_ptr<Controller> make_controller(const std::string& name) {
    if (name == "local") return std::make_unique<LocalController>();
    if (name == "global") return std::make_unique<GlobalController>();
    if (name == "none") return std::make_unique<NoneController>();
    throw ConfigError("unknown controller \"" + name + "\" (expected local, global, or none)");
}

const std::vector<std::string>& controller_names() {
    static const std::vector<std::string> names = {"local", "global", "none"};
    return names;
}

}  // namespace flocksim
