#include "cavmech/scenarios.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "cavmech/backaction.hpp"
#include "cavmech/csv.hpp"
#include "cavmech/lattice.hpp"
#include "cavmech/statics.hpp"

namespace cavmech {

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < points; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
  return out;
}

LatticeSpec latticeFromParams(const SystemParams& p, int cutoff, double depth) {
  LatticeSpec spec;
  spec.depth = depth;
  spec.kT = p.trapWavenumber();
  spec.kP = p.probeWavenumber();
  spec.planewaveCutoff = cutoff;
  return spec;
}

CsvTable bandsTable(const ScenarioConfig& cfg) {
  const auto& b = std::get<BandsConfig>(cfg.block);
  const BandStructure bs =
      bandStructure(latticeFromParams(cfg.params, b.cutoff, b.depth), b.qGrid, b.nBands);
  CsvTable t;
  t.header = {"q_over_kt", "band_index", "energy_Er"};
  for (int j = 0; j < bs.quasimomenta.size(); ++j) {
    for (int band = 0; band < b.nBands; ++band) {
      t.rows.push_back({renderNumber(bs.quasimomenta[j]), renderNumber(static_cast<long long>(band)),
                        renderNumber(bs.energies(band, j))});
    }
  }
  return t;
}

CsvTable weightsTable(const ScenarioConfig& cfg) {
  const auto& w = std::get<WeightsConfig>(cfg.block);
  CsvTable t;
  t.header = {"depth_Er", "band_index", "weight"};
  for (double depth : w.depths) {
    const ExcitationWeights ew =
        excitationWeights(latticeFromParams(cfg.params, w.cutoff, depth), w.nBands);
    for (int i = 0; i < ew.weights.size(); ++i) {
      t.rows.push_back({renderNumber(depth), renderNumber(static_cast<long long>(i + 1)),
                        renderNumber(ew.weights[i])});
    }
  }
  return t;
}

void appendSweepRows(CsvTable& t, const ScenarioConfig& cfg, const CollectiveMode& mode,
                     SweepDirection dir) {
  const auto& s = std::get<SweepConfig>(cfg.block);
  std::vector<double> deltas = linspace(s.deltaMin, s.deltaMax, s.points);
  if (dir == SweepDirection::Down) std::reverse(deltas.begin(), deltas.end());

  std::vector<DriveCondition> schedule;
  schedule.reserve(deltas.size());
  for (double d : deltas) schedule.push_back({d * cfg.params.kappa, s.nMax, cfg.params.kappa});

  const SweepTrace trace = transmissionSweep(schedule, dir, mode);
  const char* label = dir == SweepDirection::Up ? "up" : "down";
  for (const SweepPoint& p : trace.points) {
    const double norm = s.nMax > 0.0 ? p.photons / s.nMax : 0.0;
    t.rows.push_back({renderNumber(p.deltaPC / cfg.params.kappa), label, renderNumber(p.z),
                      renderNumber(norm), p.branchJump ? "1" : "0"});
  }
}

CsvTable sweepTable(const ScenarioConfig& cfg, const CollectiveMode& mode) {
  const auto& s = std::get<SweepConfig>(cfg.block);
  CsvTable t;
  t.header = {"delta_pc_over_kappa", "direction", "z_m", "photons_norm", "branch_jump"};
  if (s.direction == "up" || s.direction == "both") appendSweepRows(t, cfg, mode, SweepDirection::Up);
  if (s.direction == "down" || s.direction == "both")
    appendSweepRows(t, cfg, mode, SweepDirection::Down);
  return t;
}

CsvTable mapTable(const ScenarioConfig& cfg, const CollectiveMode& mode) {
  const auto& m = std::get<MapConfig>(cfg.block);
  const std::vector<double> deltas = linspace(m.deltaMin, m.deltaMax, m.deltaPoints);
  const std::vector<double> photons = linspace(m.nMaxMin, m.nMaxMax, m.nMaxPoints);

  std::vector<double> deltasRad;
  deltasRad.reserve(deltas.size());
  for (double d : deltas) deltasRad.push_back(d * cfg.params.kappa);
  const Eigen::MatrixXi counts = bistabilityMap(deltasRad, photons, mode, cfg.params.kappa);

  CsvTable t;
  t.header = {"delta_over_kappa", "n_max", "solution_count"};
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = 0; j < photons.size(); ++j) {
      t.rows.push_back({renderNumber(deltas[i]), renderNumber(photons[j]),
                        renderNumber(static_cast<long long>(
                            counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))))});
    }
  }
  return t;
}

CsvTable backactionTable(const ScenarioConfig& cfg, const CollectiveMode& mode) {
  const auto& b = std::get<BackactionConfig>(cfg.block);
  CsvTable t;
  t.header = {"delta_pc_over_kappa", "s_minus", "s_plus", "diffusion", "dynamical",
              "steady_phonons_or_nan"};
  for (double delta : linspace(b.deltaMin, b.deltaMax, b.points)) {
    const DriveCondition d{delta * cfg.params.kappa, b.meanPhotons, cfg.params.kappa};
    const SpectralPair s = spectralDensities(d, b.meanPhotons, mode.omegaZ);
    const BackactionRates rates = backactionRates(d, mode, b.meanPhotons);
    const double steady =
        rates.steadyPhonons ? *rates.steadyPhonons : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back({renderNumber(delta), renderNumber(s.sMinus), renderNumber(s.sPlus),
                      renderNumber(rates.diffusion), renderNumber(rates.dynamical),
                      renderNumber(steady)});
  }
  return t;
}

CsvTable granularityTable(const ScenarioConfig& cfg) {
  const auto& g = std::get<GranularityConfig>(cfg.block);
  const auto scan = granularityScan(cfg.params, PhysicalConstants{}, g.detunings);
  CsvTable t;
  t.header = {"delta_ca_rad_per_s", "epsilon", "granular"};
  for (const GranularityPoint& p : scan) {
    t.rows.push_back(
        {renderNumber(p.deltaCA), renderNumber(p.epsilon), p.granular ? "1" : "0"});
  }
  return t;
}

nlohmann::json sidecarJson(const ScenarioConfig& cfg, const CollectiveMode& mode) {
  nlohmann::json j;
  j["config"] = configToJson(cfg);
  j["collectiveMode"] = {{"mass", mode.mass},
                         {"omegaZ", mode.omegaZ},
                         {"zHo", mode.zHo},
                         {"perPhotonForce", mode.perPhotonForce},
                         {"granularity", mode.granularity}};
  j["run"] = {{"tool", "cavmech"}, {"formatVersion", 1}};
  return j;
}

}  // namespace

std::vector<std::string> runScenario(const ScenarioConfig& cfg) {
  // The backaction omegaZ override changes the mechanical mode itself, so the
  // sidecar reports the mode the scenario actually used.
  SystemParams effective = cfg.params;
  if (const auto* b = std::get_if<BackactionConfig>(&cfg.block); b && b->omegaZ)
    effective.omegaZ = *b->omegaZ;
  const CollectiveMode mode = deriveCollectiveMode(effective);

  // Compute everything before touching the filesystem.
  CsvTable table;
  switch (cfg.scenario) {
    case Scenario::Bands: table = bandsTable(cfg); break;
    case Scenario::Weights: table = weightsTable(cfg); break;
    case Scenario::Sweep: table = sweepTable(cfg, mode); break;
    case Scenario::Map: table = mapTable(cfg, mode); break;
    case Scenario::Backaction: table = backactionTable(cfg, mode); break;
    case Scenario::Granularity: table = granularityTable(cfg); break;
  }
  const nlohmann::json sidecar = sidecarJson(cfg, mode);

  const std::string csvPath = cfg.output + "_" + scenarioName(cfg.scenario) + ".csv";
  const std::string sidecarPath = cfg.output + "_run.json";
  std::vector<std::string> written;
  try {
    written.push_back(emitCsv(table, csvPath));
    std::ofstream out(sidecarPath, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + sidecarPath + "' for writing");
    out << sidecar.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + sidecarPath + "'");
    written.push_back(sidecarPath);
  } catch (...) {
    for (const std::string& path : written) std::remove(path.c_str());
    std::remove(csvPath.c_str());
    throw;
  }
  return written;
}

}  // namespace cavmech
