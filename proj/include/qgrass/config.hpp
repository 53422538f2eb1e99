#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgrass/enumerate.hpp"
#include "qgrass/qcalc.hpp"

namespace qgrass {

// Runtime knobs shared by the CLI and the suite runner. A config file is a
// JSON object; every field is optional:
//   {"enumeration_budget": 5000000,
//    "default_q_list": [2, 3],
//    "output_dir": "out",
//    "jobs": 4,
//    "suite_grids": {"f1-decreasing": [{"n": 9, "k": 3, "t": 1, "s": 1, "q": 2}]}}
// suite_grids overrides the built-in grid for the named lemma id.
struct Config {
    long enumeration_budget = kDefaultBudget;
    std::vector<int> default_q_list{2, 3};
    std::string output_dir = ".";
    int jobs = 0; // 0 = leave the OpenMP default alone
    std::map<std::string, std::vector<ParamPoint>> suite_grids;
};

Config load_config(const std::string& path);

// Reads $QGRASS_CONFIG if set and non-empty, otherwise returns defaults.
Config config_from_env();

} // namespace qgrass
