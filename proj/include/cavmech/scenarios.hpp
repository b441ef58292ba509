#pragma once

#include <string>
#include <vector>

#include "cavmech/config.hpp"

namespace cavmech {

/// Runs the configured scenario and writes its CSV data file plus a JSON
/// sidecar (resolved config + derived collective mode). Returns the written
/// paths. Outputs are byte-identical across repeated runs; on failure any
/// partially written output is removed before the error propagates.
std::vector<std::string> runScenario(const ScenarioConfig& cfg);

}  // namespace cavmech
