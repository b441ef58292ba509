#include "cavmech/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace cavmech {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

// Tracks which keys of one JSON object were consumed so leftovers can be
// reported by name.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string context) : obj_(j), context_(std::move(context)) {
    if (!obj_.is_object()) fail("'" + context_ + "' must be a JSON object");
  }

  bool has(const char* key) const { return obj_.contains(key); }

  double number(const char* key) {
    require(key);
    return numberOr(key, 0.0);
  }

  double numberOr(const char* key, double fallback) {
    if (!obj_.contains(key)) return fallback;
    mark(key);
    const json& v = obj_.at(key);
    if (!v.is_number()) fail(path(key) + " must be a number");
    return v.get<double>();
  }

  int integerOr(const char* key, int fallback) {
    if (!obj_.contains(key)) return fallback;
    mark(key);
    const json& v = obj_.at(key);
    if (!v.is_number_integer()) fail(path(key) + " must be an integer");
    return v.get<int>();
  }

  int integer(const char* key) {
    require(key);
    return integerOr(key, 0);
  }

  std::string text(const char* key) {
    require(key);
    mark(key);
    const json& v = obj_.at(key);
    if (!v.is_string()) fail(path(key) + " must be a string");
    return v.get<std::string>();
  }

  std::string textOr(const char* key, const std::string& fallback) {
    if (!obj_.contains(key)) return fallback;
    return text(key);
  }

  std::vector<double> numberList(const char* key) {
    require(key);
    mark(key);
    const json& v = obj_.at(key);
    if (!v.is_array()) fail(path(key) + " must be an array of numbers");
    std::vector<double> out;
    for (const json& e : v) {
      if (!e.is_number()) fail(path(key) + " must contain only numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  const json& child(const char* key) {
    require(key);
    mark(key);
    return obj_.at(key);
  }

  std::string path(const char* key) const {
    return context_.empty() ? std::string(key) : context_ + "." + key;
  }

  // Throws if any key was never consumed, naming the first offender.
  void done() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) {
        fail("unknown field '" + (context_.empty() ? it.key() : context_ + "." + it.key()) + "'");
      }
    }
  }

 private:
  void require(const char* key) const {
    if (!obj_.contains(key)) fail("missing field '" + path(key) + "'");
  }
  void mark(const char* key) { seen_.insert(key); }

  const json& obj_;
  std::string context_;
  std::set<std::string> seen_;
};

SystemParams readParams(const json& j, bool hz) {
  ObjectReader r(j, "params");
  const double scale = hz ? two_pi : 1.0;
  SystemParams p;
  p.nEff = r.number("nEff");
  p.g0 = scale * r.number("g0");
  p.deltaCA = scale * r.number("deltaCA");
  p.kappa = scale * r.number("kappa");
  p.omegaZ = scale * r.number("omegaZ");
  p.lambdaProbe = r.numberOr("lambdaProbe", p.lambdaProbe);
  p.lambdaTrap = r.numberOr("lambdaTrap", p.lambdaTrap);
  r.done();
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("params: ") + e.what());
  }
  return p;
}

void checkRange(const std::string& where, double lo, double hi, int points) {
  if (!(lo <= hi)) fail(where + ": requires min <= max");
  if (points < 1) fail(where + ": requires at least one point");
}

BandsConfig readBands(const json& j) {
  ObjectReader r(j, "bands");
  BandsConfig b;
  b.depth = r.number("depth");
  b.qGrid = r.integerOr("qGrid", b.qGrid);
  b.nBands = r.integerOr("nBands", b.nBands);
  b.cutoff = r.integerOr("cutoff", b.cutoff);
  r.done();
  if (b.depth < 0.0) fail("bands.depth must be >= 0");
  if (b.qGrid < 2) fail("bands.qGrid must be >= 2");
  if (b.nBands < 1) fail("bands.nBands must be >= 1");
  if (b.cutoff < 8) fail("bands.cutoff must be >= 8");
  if (b.nBands > 2 * b.cutoff) fail("bands.nBands must be <= 2 * cutoff");
  return b;
}

WeightsConfig readWeights(const json& j) {
  ObjectReader r(j, "weights");
  WeightsConfig w;
  w.depths = r.numberList("depths");
  w.nBands = r.integerOr("nBands", w.nBands);
  w.cutoff = r.integerOr("cutoff", w.cutoff);
  r.done();
  if (w.depths.empty()) fail("weights.depths must be nonempty");
  for (double d : w.depths)
    if (d < 0.0) fail("weights.depths must be >= 0");
  if (w.nBands < 3) fail("weights.nBands must be >= 3");
  if (w.cutoff < 8) fail("weights.cutoff must be >= 8");
  return w;
}

SweepConfig readSweep(const json& j) {
  ObjectReader r(j, "sweep");
  SweepConfig s;
  s.deltaMin = r.number("deltaMin");
  s.deltaMax = r.number("deltaMax");
  s.points = r.integerOr("points", s.points);
  s.nMax = r.number("nMax");
  s.direction = r.textOr("direction", s.direction);
  r.done();
  checkRange("sweep", s.deltaMin, s.deltaMax, s.points);
  if (s.nMax < 0.0) fail("sweep.nMax must be >= 0");
  if (s.direction != "up" && s.direction != "down" && s.direction != "both")
    fail("sweep.direction must be one of up, down, both");
  return s;
}

MapConfig readMap(const json& j) {
  ObjectReader r(j, "map");
  MapConfig m;
  m.deltaMin = r.number("deltaMin");
  m.deltaMax = r.number("deltaMax");
  m.deltaPoints = r.integer("deltaPoints");
  m.nMaxMin = r.number("nMaxMin");
  m.nMaxMax = r.number("nMaxMax");
  m.nMaxPoints = r.integer("nMaxPoints");
  r.done();
  checkRange("map.delta", m.deltaMin, m.deltaMax, m.deltaPoints);
  checkRange("map.nMax", m.nMaxMin, m.nMaxMax, m.nMaxPoints);
  if (m.nMaxMin < 0.0) fail("map.nMaxMin must be >= 0");
  return m;
}

BackactionConfig readBackaction(const json& j, bool hz) {
  ObjectReader r(j, "backaction");
  BackactionConfig b;
  b.deltaMin = r.number("deltaMin");
  b.deltaMax = r.number("deltaMax");
  b.points = r.integerOr("points", b.points);
  b.meanPhotons = r.number("meanPhotons");
  if (r.has("omegaZ")) b.omegaZ = (hz ? two_pi : 1.0) * r.number("omegaZ");
  r.done();
  checkRange("backaction", b.deltaMin, b.deltaMax, b.points);
  if (b.meanPhotons < 0.0) fail("backaction.meanPhotons must be >= 0");
  if (b.omegaZ && !(*b.omegaZ > 0.0)) fail("backaction.omegaZ must be positive");
  return b;
}

GranularityConfig readGranularity(const json& j, bool hz) {
  ObjectReader r(j, "granularity");
  GranularityConfig g;
  g.detunings = r.numberList("detunings");
  r.done();
  if (g.detunings.empty()) fail("granularity.detunings must be nonempty");
  const double scale = hz ? two_pi : 1.0;
  for (double& d : g.detunings) {
    if (d == 0.0) fail("granularity.detunings must be nonzero");
    d *= scale;
  }
  return g;
}

}  // namespace

std::string scenarioName(Scenario s) {
  switch (s) {
    case Scenario::Bands: return "bands";
    case Scenario::Weights: return "weights";
    case Scenario::Sweep: return "sweep";
    case Scenario::Map: return "map";
    case Scenario::Backaction: return "backaction";
    case Scenario::Granularity: return "granularity";
  }
  throw std::logic_error("scenarioName: unreachable");
}

Scenario scenarioFromName(const std::string& name) {
  if (name == "bands") return Scenario::Bands;
  if (name == "weights") return Scenario::Weights;
  if (name == "sweep") return Scenario::Sweep;
  if (name == "map") return Scenario::Map;
  if (name == "backaction") return Scenario::Backaction;
  if (name == "granularity") return Scenario::Granularity;
  fail("unknown scenario '" + name + "'");
}

ScenarioConfig parseConfig(const nlohmann::json& j, bool frequenciesInHz) {
  ObjectReader top(j, "");
  ScenarioConfig cfg;
  cfg.params = readParams(top.child("params"), frequenciesInHz);
  cfg.scenario = scenarioFromName(top.text("scenario"));
  cfg.output = top.text("output");
  if (cfg.output.empty()) fail("output must be a nonempty path prefix");

  const std::string blockName = scenarioName(cfg.scenario);
  const json& block = top.child(blockName.c_str());
  switch (cfg.scenario) {
    case Scenario::Bands: cfg.block = readBands(block); break;
    case Scenario::Weights: cfg.block = readWeights(block); break;
    case Scenario::Sweep: cfg.block = readSweep(block); break;
    case Scenario::Map: cfg.block = readMap(block); break;
    case Scenario::Backaction: cfg.block = readBackaction(block, frequenciesInHz); break;
    case Scenario::Granularity: cfg.block = readGranularity(block, frequenciesInHz); break;
  }
  top.done();  // rejects a second scenario block or any stray key
  return cfg;
}

ScenarioConfig loadConfig(const std::string& path, bool frequenciesInHz) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parseConfig(j, frequenciesInHz);
}

nlohmann::json configToJson(const ScenarioConfig& cfg) {
  nlohmann::json j;
  j["params"] = {{"nEff", cfg.params.nEff},       {"g0", cfg.params.g0},
                 {"deltaCA", cfg.params.deltaCA}, {"kappa", cfg.params.kappa},
                 {"omegaZ", cfg.params.omegaZ},   {"lambdaProbe", cfg.params.lambdaProbe},
                 {"lambdaTrap", cfg.params.lambdaTrap}};
  j["scenario"] = scenarioName(cfg.scenario);
  j["output"] = cfg.output;

  nlohmann::json b;
  if (const auto* bands = std::get_if<BandsConfig>(&cfg.block)) {
    b = {{"depth", bands->depth},
         {"qGrid", bands->qGrid},
         {"nBands", bands->nBands},
         {"cutoff", bands->cutoff}};
  } else if (const auto* weights = std::get_if<WeightsConfig>(&cfg.block)) {
    b = {{"depths", weights->depths}, {"nBands", weights->nBands}, {"cutoff", weights->cutoff}};
  } else if (const auto* sweep = std::get_if<SweepConfig>(&cfg.block)) {
    b = {{"deltaMin", sweep->deltaMin},
         {"deltaMax", sweep->deltaMax},
         {"points", sweep->points},
         {"nMax", sweep->nMax},
         {"direction", sweep->direction}};
  } else if (const auto* map = std::get_if<MapConfig>(&cfg.block)) {
    b = {{"deltaMin", map->deltaMin},   {"deltaMax", map->deltaMax},
         {"deltaPoints", map->deltaPoints}, {"nMaxMin", map->nMaxMin},
         {"nMaxMax", map->nMaxMax},     {"nMaxPoints", map->nMaxPoints}};
  } else if (const auto* back = std::get_if<BackactionConfig>(&cfg.block)) {
    b = {{"deltaMin", back->deltaMin},
         {"deltaMax", back->deltaMax},
         {"points", back->points},
         {"meanPhotons", back->meanPhotons}};
    if (back->omegaZ) b["omegaZ"] = *back->omegaZ;
  } else if (const auto* gran = std::get_if<GranularityConfig>(&cfg.block)) {
    b = {{"detunings", gran->detunings}};
  }
  j[scenarioName(cfg.scenario)] = b;
  return j;
}

}  // namespace cavmech
