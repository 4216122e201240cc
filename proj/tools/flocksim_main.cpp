// Command-line front end: single episodes, parameter sweeps, and score dumps
// over the flocksim library. Exit code 0 on success, 1 on any config or
// runtime error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flocksim/config.hpp"
#include "flocksim/confscore.hpp"
#include "flocksim/sim.hpp"
#include "flocksim/sweep.hpp"

namespace {

using namespace flocksim;

struct Args {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> aux;
    std::optional<std::string> controller;
    std::optional<int> top_k;
    std::optional<double> lambda;
    std::string trajectory_path;
    bool full_steps = false;
};

void add_common_options(CLI::App& cmd, Args& args) {
    cmd.add_option("--config", args.config_path, "JSON config file; defaults apply when omitted");
    cmd.add_option("--out", args.out_path, "output file; stdout when omitted");
    cmd.add_option("--seed", args.seed, "override the RNG seed");
    cmd.add_option("--aux", args.aux, "auxiliary controller on or off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd.add_option("--controller", args.controller, "base controller: local, global or none");
    cmd.add_option("--top-k", args.top_k, "override the leader count k");
    cmd.add_option("--lambda", args.lambda, "override the assistant gain");
    cmd.add_option("--dump-trajectory", args.trajectory_path,
                   "write one JSON object per step to this file");
}

nlohmann::json load_doc(const Args& args) {
    if (args.config_path.empty()) return nlohmann::json::object();
    return load_json_file(args.config_path);
}

void apply_overrides(const Args& args, SimParams& params) {
    if (args.seed) params.seed = *args.seed;
    if (args.aux) params.aux_enabled = (*args.aux == "on");
    if (args.top_k) params.top_k = *args.top_k;
    if (args.lambda) params.lambda_override = *args.lambda;
    params.validate();
}

std::string pick_controller(const Args& args, const nlohmann::json& doc) {
    if (args.controller) return *args.controller;
    if (doc.contains("controller")) {
        if (!doc.at("controller").is_string())
            throw ConfigError("config field controller: expected a string");
        return doc.at("controller").get<std::string>();
    }
    return "local";
}

// Streams to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw ConfigError("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

RunOptions make_run_options(const Args& args, std::ofstream& trajectory_file) {
    RunOptions opts;
    opts.sample_all_scores = args.full_steps;
    if (!args.trajectory_path.empty()) {
        trajectory_file.open(args.trajectory_path);
        if (!trajectory_file) throw ConfigError("cannot open trajectory file: " + args.trajectory_path);
        opts.trajectory_stream = &trajectory_file;
    }
    return opts;
}

SweepRow summary_row(const SimParams& params, const std::string& controller,
                     const EpisodeRecord& record) {
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
    row.summary = episode_cost(record);
    row.initial_state_hash = record.initial_state_hash;
    return row;
}

int cmd_simulate(const Args& args) {
    const nlohmann::json doc = load_doc(args);
    SimParams params = params_from_json(doc);
    apply_overrides(args, params);
    const std::string controller = pick_controller(args, doc);

    std::ofstream trajectory_file;
    const RunOptions opts = make_run_options(args, trajectory_file);
    const EpisodeRecord record = run_episode(params, controller, opts);

    Output out(args.out_path);
    out.stream() << kSweepCsvHeader << '\n'
                 << format_sweep_row(summary_row(params, controller, record)) << '\n';
    return 0;
}

int cmd_sweep(const Args& args) {
    const nlohmann::json doc = load_doc(args);
    SweepSpec spec = sweep_from_json(doc);
    if (args.seed) spec.base.seed = *args.seed;
    if (args.aux) spec.base.aux_enabled = (*args.aux == "on");
    if (args.lambda) spec.base.lambda_override = *args.lambda;
    if (args.controller) spec.controllers = {*args.controller};
    if (args.top_k) spec.top_k_values = {*args.top_k};
    spec.validate();

    const auto rows = run_sweep(spec);
    Output out(args.out_path);
    write_sweep_csv(rows, out.stream());
    return 0;
}

int cmd_scores(const Args& args) {
    const nlohmann::json doc = load_doc(args);
    SimParams params = params_from_json(doc);
    apply_overrides(args, params);
    const std::string controller = pick_controller(args, doc);

    std::ofstream trajectory_file;
    const RunOptions opts = make_run_options(args, trajectory_file);
    const EpisodeRecord record = run_episode(params, controller, opts);

    Output out(args.out_path);
    write_scores_csv(record.score_history, out.stream());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-agent flocking simulator"};
    app.require_subcommand(1);

    Args sim_args, sweep_args, score_args;
    CLI::App* simulate =
        app.add_subcommand("simulate", "run one episode and print its summary row");
    add_common_options(*simulate, sim_args);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "run a parameter grid and write one CSV row per episode; scalar "
                 "overrides collapse the matching grid axis");
    add_common_options(*sweep, sweep_args);

    CLI::App* scores =
        app.add_subcommand("scores", "run one episode and write the sampled score CSV");
    add_common_options(*scores, score_args);
    scores->add_flag("--full-steps", score_args.full_steps,
                     "sample scores at every step instead of start, middle, end");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(sim_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        return cmd_scores(score_args);
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
