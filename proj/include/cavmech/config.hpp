#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cavmech/params.hpp"

namespace cavmech {

enum class Scenario { Bands, Weights, Sweep, Map, Backaction, Granularity };

std::string scenarioName(Scenario s);
Scenario scenarioFromName(const std::string& name);

// Detuning ranges are dimensionless (deltaPC / kappa); depths are in Er.
struct BandsConfig {
  double depth = 0.0;
  int qGrid = 128;
  int nBands = 5;
  int cutoff = 16;
  bool operator==(const BandsConfig&) const = default;
};

struct WeightsConfig {
  std::vector<double> depths;
  int nBands = 5;
  int cutoff = 16;
  bool operator==(const WeightsConfig&) const = default;
};

struct SweepConfig {
  double deltaMin = 0.0;
  double deltaMax = 0.0;
  int points = 401;
  double nMax = 0.0;
  std::string direction = "both";  // up | down | both
  bool operator==(const SweepConfig&) const = default;
};

struct MapConfig {
  double deltaMin = 0.0;
  double deltaMax = 0.0;
  int deltaPoints = 0;
  double nMaxMin = 0.0;
  double nMaxMax = 0.0;
  int nMaxPoints = 0;
  bool operator==(const MapConfig&) const = default;
};

struct BackactionConfig {
  double deltaMin = 0.0;
  double deltaMax = 0.0;
  int points = 401;
  double meanPhotons = 0.0;
  std::optional<double> omegaZ;  // sideband/mode frequency override, rad/s
  bool operator==(const BackactionConfig&) const = default;
};

struct GranularityConfig {
  std::vector<double> detunings;  // rad/s
  bool operator==(const GranularityConfig&) const = default;
};

using ScenarioBlock = std::variant<BandsConfig, WeightsConfig, SweepConfig, MapConfig,
                                   BackactionConfig, GranularityConfig>;

struct ScenarioConfig {
  SystemParams params;
  Scenario scenario = Scenario::Bands;
  ScenarioBlock block;
  std::string output;
  bool operator==(const ScenarioConfig&) const = default;
};

/// Strict parse: unknown or missing fields raise std::invalid_argument naming
/// the field; invariant violations raise with the reason. When
/// frequenciesInHz is set, frequency-valued inputs (g0, deltaCA, kappa,
/// omegaZ, the backaction omegaZ override, granularity detunings) are read as
/// Hz and multiplied by 2 pi; dimensionless detuning ranges are untouched.
ScenarioConfig parseConfig(const nlohmann::json& j, bool frequenciesInHz = false);
ScenarioConfig loadConfig(const std::string& path, bool frequenciesInHz = false);

/// Resolved config (defaults filled, rad/s) as JSON; parseConfig of the
/// result reproduces the config exactly.
nlohmann::json configToJson(const ScenarioConfig& cfg);

}  // namespace cavmech
