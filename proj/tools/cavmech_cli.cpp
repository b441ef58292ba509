#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cavmech/scenarios.hpp"

namespace {

struct SubcommandState {
  std::string configPath;
  std::optional<std::string> outPrefix;
  cavmech::Scenario scenario;
};

// Exit codes: 0 success, 2 config error, 3 numerical/output failure.
int runOne(const SubcommandState& state, bool hz) {
  cavmech::ScenarioConfig cfg;
  try {
    cfg = cavmech::loadConfig(state.configPath, hz);
    if (cfg.scenario != state.scenario) {
      std::cerr << "error: config declares scenario '" << cavmech::scenarioName(cfg.scenario)
                << "' but the '" << cavmech::scenarioName(state.scenario)
                << "' subcommand was invoked\n";
      return 2;
    }
    if (state.outPrefix) cfg.output = *state.outPrefix;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (const std::string& path : cavmech::runScenario(cfg)) std::cout << path << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cavity optomechanics of a collective ultracold-atom mode: band structure, "
               "bistable statics, and measurement-backaction rates"};
  app.require_subcommand(1);

  bool hz = false;
  app.add_flag("--hz", hz,
               "Interpret frequency-valued config inputs as Hz (multiplied by 2*pi); "
               "applies globally, never per field");

  const std::pair<const char*, cavmech::Scenario> scenarios[] = {
      {"bands", cavmech::Scenario::Bands},
      {"weights", cavmech::Scenario::Weights},
      {"sweep", cavmech::Scenario::Sweep},
      {"map", cavmech::Scenario::Map},
      {"backaction", cavmech::Scenario::Backaction},
      {"granularity", cavmech::Scenario::Granularity},
  };

  std::vector<std::shared_ptr<SubcommandState>> states;
  for (const auto& [name, scenario] : scenarios) {
    auto state = std::make_shared<SubcommandState>();
    state->scenario = scenario;
    CLI::App* sub = app.add_subcommand(name, std::string("Run the ") + name + " scenario");
    sub->fallthrough();  // lets the global --hz appear after the subcommand
    sub->add_option("--config", state->configPath, "JSON config file")->required();
    sub->add_option("--out", state->outPrefix, "Override the config's output path prefix");
    states.push_back(state);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a config error
  }

  for (std::size_t i = 0; i < states.size(); ++i) {
    if (app.get_subcommands().size() == 1 &&
        app.get_subcommands()[0]->get_name() == scenarios[i].first) {
      return runOne(*states[i], hz);
    }
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}
