#include "qgrass/config.hpp"

#include <cstdlib>

#include "json.hpp"
#include "qgrass/errors.hpp"
#include "qgrass/json_io.hpp"

namespace qgrass {

using nlohmann::json;

Config load_config(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    if (!j.is_object()) throw IoError(path + ": config must be a JSON object");
    Config cfg;
    if (j.contains("enumeration_budget")) {
        if (!j["enumeration_budget"].is_number_integer())
            throw IoError("enumeration_budget must be an integer");
        cfg.enumeration_budget = j["enumeration_budget"].get<long>();
        if (cfg.enumeration_budget < 1)
            throw IoError("enumeration_budget must be >= 1");
    }
    if (j.contains("default_q_list")) {
        if (!j["default_q_list"].is_array())
            throw IoError("default_q_list must be an array");
        cfg.default_q_list.clear();
        for (const auto& e : j["default_q_list"]) {
            if (!e.is_number_integer()) throw IoError("default_q_list entries must be integers");
            cfg.default_q_list.push_back(e.get<int>());
        }
        if (cfg.default_q_list.empty()) throw IoError("default_q_list must be non-empty");
    }
    if (j.contains("output_dir")) {
        if (!j["output_dir"].is_string()) throw IoError("output_dir must be a string");
        cfg.output_dir = j["output_dir"].get<std::string>();
    }
    if (j.contains("jobs")) {
        if (!j["jobs"].is_number_integer()) throw IoError("jobs must be an integer");
        cfg.jobs = j["jobs"].get<int>();
        if (cfg.jobs < 0) throw IoError("jobs must be >= 0");
    }
    if (j.contains("suite_grids")) {
        if (!j["suite_grids"].is_object()) throw IoError("suite_grids must be an object");
        for (const auto& [key, val] : j["suite_grids"].items())
            cfg.suite_grids[key] = points_from_json(val);
    }
    return cfg;
}

Config config_from_env() {
    const char* path = std::getenv("QGRASS_CONFIG");
    if (path == nullptr || *path == '\0') return Config{};
    return load_config(path);
}

} // namespace qgrass
