#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flocksim/core.hpp"
#include "flocksim/metrics.hpp"

namespace flocksim {

/// A grid of experiment cells: Cartesian product of the value lists times
/// controllers times seeds, each optionally run as a paired A/B (auxiliary
/// controller off and on, sharing the seed and so the initial state).
struct SweepSpec {
    SimParams base;
    std::vector<int> n_agents_values = {25, 50, 100};
    std::vector<double> comm_radius_values = {1.0, 1.5, 2.0, 3.0, 4.0};
    std::vector<double> v_max_values = {0.5, 1.5, 2.5, 3.5};
    std::vector<int> top_k_values = {1, 3, 5};
    int seeds_per_cell = 1;
    std::vector<std::string> controllers = {"local"};
    bool paired_ab = true;

    void validate() const;
};

/// One sweep result row. `summary` is empty iff the cell failed, in which case
/// `error` holds the message. Real-valued/int fields mirror the CSV columns.
struct SweepRow {
    std::string controller;
    int n_agents = 0;
    double comm_radius = 0.0;
    double v_max = 0.0;
    int top_k = 0;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    bool aux_enabled = false;
    std::optional<CostSummary> summary;
    std::string error;
    std::uint64_t initial_state_hash = 0;  // not a CSV column; pairing check
};

/// Runs every cell in a fixed nesting order (controller, n_agents,
/// comm_radius, v_max, top_k, seed, then aux off/on when paired). Cell seeds
/// are base.seed + 0 .. base.seed + seeds_per_cell-1. A failing cell records
/// its error and the sweep continues. Deterministic: the same spec yields the
/// same rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "controller,n_agents,comm_radius,v_max,top_k,lambda,seed,aux_enabled,"
    "total_cost,initial_step_cost,final_step_cost,isolated_at_end,components_at_end,error";

/// Header plus one line per row; reals carry 9 significant digits. Numeric
/// result fields of failed cells are left empty.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// One row formatted exactly as write_sweep_csv writes it (no newline).
std::string format_sweep_row(const SweepRow& row);

}  // namespace flocksim
