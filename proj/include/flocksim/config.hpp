#pragma once

#include <string>

#include <json.hpp>

#include "flocksim/core.hpp"
#include "flocksim/sweep.hpp"

namespace flocksim {

/// Parses and returns the JSON document at `path`; ConfigError on I/O or
/// syntax problems.
nlohmann::json load_json_file(const std::string& path);

/// SimParams from a JSON object. Every field is optional and falls back to
/// the SimParams default; unknown keys are ignored (sweep fields share the
/// document). Type errors and invariant violations raise ConfigError.
SimParams params_from_json(const nlohmann::json& doc);

/// SweepSpec from a JSON object: the SimParams fields form the base, plus
/// n_agents_values, comm_radius_values, v_max_values, top_k_values,
/// seeds_per_cell, controllers, paired_ab, all optional.
SweepSpec sweep_from_json(const nlohmann::json& doc);

}  // namespace flocksim
