#pragma once

#include <filesystem>
#include <string>

#include "linerec/types.hpp"

namespace linerec {

/// Loads a scenario from its canonical JSON schema (see README). Coordinates
/// declared in units of r_meas ("coordinates": "r_meas") are converted to
/// meters at ingestion.
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const std::string& json_text);

std::string scenario_to_json(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

}  // namespace linerec
