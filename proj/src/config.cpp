#include "flocksim/config.hpp"

#include <fstream>

namespace flocksim {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
}

namespace {

template <typename T>
void read_field(const nlohmann::json& doc, const char* key, T& out) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return;
    try {
        out = it->get<T>();
    } catch (const nlohmann::json::type_error&) {
        throw ConfigError(std::string("config field \"") + key + "\" has the wrong type");
    }
}

template <typename T>
void read_optional_field(const nlohmann::json& doc, const char* key, std::optional<T>& out) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return;
    try {
        out = it->get<T>();
    } catch (const nlohmann::json::type_error&) {
        throw ConfigError(std::string("config field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

SimParams params_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    SimParams p;
    read_field(doc, "n_agents", p.n_agents);
    read_field(doc, "comm_radius", p.comm_radius);
    read_field(doc, "v_max", p.v_max);
    read_field(doc, "sampling_time", p.sampling_time);
    read_field(doc, "n_steps", p.n_steps);
    read_field(doc, "top_k", p.top_k);
    read_optional_field(doc, "lambda", p.lambda_override);
    read_field(doc, "aux_enabled", p.aux_enabled);
    read_field(doc, "seed", p.seed);
    read_field(doc, "init_min_separation", p.init_min_separation);
    read_optional_field(doc, "init_box_side", p.init_box_side);
    p.validate();
    return p;
}

SweepSpec sweep_from_json(const nlohmann::json& doc) {
    SweepSpec spec;
    spec.base = params_from_json(doc);
    read_field(doc, "n_agents_values", spec.n_agents_values);
    read_field(doc, "comm_radius_values", spec.comm_radius_values);
    read_field(doc, "v_max_values", spec.v_max_values);
    read_field(doc, "top_k_values", spec.top_k_values);
    read_field(doc, "seeds_per_cell", spec.seeds_per_cell);
    read_field(doc, "controllers", spec.controllers);
    read_field(doc, "paired_ab", spec.paired_ab);
    spec.validate();
    return spec;
}

}  // namespace flocksim
