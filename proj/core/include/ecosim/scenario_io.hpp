#pragma once

#include <string>

#include "ecosim/config.hpp"

namespace ecosim {

// Scenario files are flat JSON documents; every key is optional and
// unspecified keys keep their defaults. Unknown keys are configuration
// errors, named in the exception message. See README for the schema.
ScenarioConfig load_scenario_file(const std::string& path);
ScenarioConfig parse_scenario_json(const std::string& text);

void save_scenario_file(const ScenarioConfig& config, const std::string& path);
std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace ecosim
