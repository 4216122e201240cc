#include "flocksim/sweep.hpp"

#include <cstdio>
#include <ostream>

#include "flocksim/confscore.hpp"
#include "flocksim/sim.hpp"

namespace flocksim {

void SweepSpec::validate() const {
    if (n_agents_values.empty() || comm_radius_values.empty() || v_max_values.empty() ||
        top_k_values.empty())
        throw ConfigError("sweep value lists must be non-empty");
    if (seeds_per_cell < 1) throw ConfigError("seeds_per_cell must be >= 1");
    if (controllers.empty()) throw ConfigError("sweep needs at least one controller");
}

namespace {

SweepRow run_cell(const SimParams& params, const std::string& controller) {
    SweepRow row;
    row.controller = controller;
    row.n_agents = params.n_agents;
    row.comm_radius = params.comm_radius;
    row.v_max = params.v_max;
    row.top_k = params.top_k;
    row.lambda =
        params.lambda_override ? *params.lambda_override : default_lambda(params.n_agents, false);
    row.seed = params.seed;
    row.aux_enabled = params.aux_enabled;
    try {
        const EpisodeRecord record = run_episode(params, controller);
        row.summary = episode_cost(record);
        row.initial_state_hash = record.initial_state_hash;
    } catch (const SimError& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();

    std::vector<SweepRow> rows;
    for (const std::string& controller : spec.controllers) {
        for (int n_agents : spec.n_agents_values) {
            for (double comm_radius : spec.comm_radius_values) {
                for (double v_max : spec.v_max_values) {
                    for (int top_k : spec.top_k_values) {
                        for (int s = 0; s < spec.seeds_per_cell; ++s) {
                            SimParams params = spec.base;
                            params.n_agents = n_agents;
                            params.comm_radius = comm_radius;
                            params.v_max = v_max;
                            params.top_k = top_k;
                            params.seed = spec.base.seed + static_cast<std::uint64_t>(s);
                            if (spec.paired_ab) {
                                params.aux_enabled = false;
                                rows.push_back(run_cell(params, controller));
                                params.aux_enabled = true;
                                rows.push_back(run_cell(params, controller));
                            } else {
                                rows.push_back(run_cell(params, controller));
                            }
                        }
                    }
                }
            }
        }
    }
    return rows;
}

namespace {

std::string fmt_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Keep the error message on one CSV field: commas and newlines become ';'.
std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return s;
}

}  // namespace

std::string format_sweep_row(const SweepRow& row) {
    std::string line;
    line += row.controller;
    line += ',' + std::to_string(row.n_agents);
    line += ',' + fmt_real(row.comm_radius);
    line += ',' + fmt_real(row.v_max);
    line += ',' + std::to_string(row.top_k);
    line += ',' + fmt_real(row.lambda);
    line += ',' + std::to_string(row.seed);
    line += row.aux_enabled ? ",true" : ",false";
    if (row.summary) {
        line += ',' + fmt_real(row.summary->total_cost);
        line += ',' + fmt_real(row.summary->initial_step_cost);
        line += ',' + fmt_real(row.summary->final_step_cost);
        line += ',' + std::to_string(row.summary->isolated_at_end);
        line += ',' + std::to_string(row.summary->components_at_end);
        line += ',';
    } else {
        line += ",,,,,,";
    }
    line += sanitize(row.error);
    return line;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows) out << format_sweep_row(row) << '\n';
}

}  // namespace flocksim
