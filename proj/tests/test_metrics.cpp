#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "flocksim/metrics.hpp"
#include "oracles.hpp"

using namespace flocksim;

namespace {

SwarmState with_velocities(std::initializer_list<Vec2> velocities) {
    SwarmState s;
    for (Vec2 v : velocities) s.agents.push_back({Vec2{}, v});
    return s;
}

}  // namespace

TEST_CASE("equal velocities have zero variance") {
    CHECK(velocity_variance_term(with_velocities({{2.0, -1.0}, {2.0, -1.0}, {2.0, -1.0}})) == 0.0);
}

TEST_CASE("antipodal pair has unit variance") {
    CHECK(velocity_variance_term(with_velocities({{1.0, 0.0}, {-1.0, 0.0}})) == 1.0);
}

TEST_CASE("four-way cross has unit variance") {
    const auto s = with_velocities({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}});
    CHECK(velocity_variance_term(s) == 1.0);
}

TEST_CASE("single agent has zero variance") {
    CHECK(velocity_variance_term(with_velocities({{3.0, 4.0}})) == 0.0);
}

TEST_CASE("variance is nonnegative on random states") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testing::random_state(rng, 20, 5.0, 3.0);
        CHECK(velocity_variance_term(s) >= 0.0);
    }
}

TEST_CASE("variance ignores a common velocity offset") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = testing::random_state(rng, 15, 5.0, 2.0);
        const double base = velocity_variance_term(s);
        const Vec2 offset{rng.next_in(-10.0, 10.0), rng.next_in(-10.0, 10.0)};
        for (AgentState& a : s.agents) a.velocity += offset;
        CHECK(velocity_variance_term(s) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("variance ignores agent order") {
    SplitMix64 rng(71);
    auto s = testing::random_state(rng, 20, 5.0, 2.0);
    const double base = velocity_variance_term(s);
    std::reverse(s.agents.begin(), s.agents.end());
    CHECK(velocity_variance_term(s) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("episode summary extracts endpoints and totals") {
    SimParams p;
    p.n_agents = 6;
    p.comm_radius = 1.5;
    p.v_max = 1.5;
    p.n_steps = 25;
    p.seed = 8;
    const auto rec = run_episode(p, "local");
    const CostSummary c = episode_cost(rec);

    double total = 0.0;
    for (double term : rec.per_step_cost_terms) total += term;
    CHECK(c.total_cost == total);
    CHECK(c.initial_step_cost == rec.per_step_cost_terms.front());
    CHECK(c.final_step_cost == rec.per_step_cost_terms.back());
    CHECK(c.isolated_at_end == rec.connectivity_history.back().isolated_count);
    CHECK(c.components_at_end == rec.connectivity_history.back().component_count);
    CHECK(c.total_cost >= 0.0);
}

TEST_CASE("single-step episode total equals its only term") {
    SimParams p;
    p.n_agents = 4;
    p.comm_radius = 2.0;
    p.v_max = 1.0;
    p.n_steps = 1;
    p.seed = 5;
    const auto rec = run_episode(p, "local");
    const CostSummary c = episode_cost(rec);
    CHECK(c.total_cost == rec.per_step_cost_terms[0]);
    CHECK(c.initial_step_cost == c.final_step_cost);
}

TEST_CASE("all-rest episode costs nothing") {
    SimParams p;
    p.n_agents = 5;
    p.comm_radius = 1.0;
    p.v_max = 0.0;
    p.n_steps = 10;
    p.seed = 2;
    CHECK(episode_cost(run_episode(p, "none")).total_cost == 0.0);
}

TEST_CASE("trajectory dump recomputes to the same total cost") {
    SimParams p;
    p.n_agents = 10;
    p.comm_radius = 1.5;
    p.v_max = 2.5;
    p.n_steps = 30;
    p.seed = 77;
    p.aux_enabled = true;

    std::ostringstream dump;
    RunOptions opts;
    opts.trajectory_stream = &dump;
    const auto rec = run_episode(p, "local", opts);
    const CostSummary c = episode_cost(rec);

    std::istringstream lines(dump.str());
    std::string line;
    double recomputed_total = 0.0;
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto obj = nlohmann::json::parse(line);
        SwarmState s;
        const auto& vels = obj.at("velocities");
        for (const auto& v : vels)
            s.agents.push_back({Vec2{}, Vec2{v.at(0).get<double>(), v.at(1).get<double>()}});
        const double term = velocity_variance_term(s);
        CHECK(term == obj.at("cost_term").get<double>());
        recomputed_total += term;
        ++rows;
    }
    CHECK(rows == p.n_steps);
    CHECK(recomputed_total == c.total_cost);
}
