#include "cavmech/params.hpp"

#include <cmath>
#include <stdexcept>

namespace cavmech {

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  if (!(kB > 0.0)) throw std::invalid_argument("kB must be positive");
  if (!(atomMassRb87 > 0.0)) throw std::invalid_argument("atomMassRb87 must be positive");
}

void SystemParams::validate() const {
  if (!(nEff >= 0.0)) throw std::invalid_argument("nEff must be >= 0");
  if (!(g0 > 0.0)) throw std::invalid_argument("g0 must be positive");
  if (deltaCA == 0.0) throw std::invalid_argument("deltaCA must be nonzero");
  if (!std::isfinite(deltaCA)) throw std::invalid_argument("deltaCA must be finite");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  if (!(omegaZ > 0.0)) throw std::invalid_argument("omegaZ must be positive");
  if (!(lambdaProbe > 0.0)) throw std::invalid_argument("lambdaProbe must be positive");
  if (!(lambdaTrap > 0.0)) throw std::invalid_argument("lambdaTrap must be positive");
}

double derivePerPhotonForce(const SystemParams& p, const PhysicalConstants& c) {
  c.validate();
  p.validate();
  return p.nEff * c.hbar * p.probeWavenumber() * p.g0 * p.g0 / p.deltaCA;
}

CollectiveMode deriveCollectiveMode(const SystemParams& p, const PhysicalConstants& c) {
  c.validate();
  p.validate();
  if (p.nEff == 0.0) throw std::invalid_argument("nEff must be positive: no mechanical mode exists");

  CollectiveMode mode;
  mode.mass = p.nEff * c.atomMassRb87;
  mode.omegaZ = p.omegaZ;
  mode.zHo = std::sqrt(c.hbar / (2.0 * mode.mass * mode.omegaZ));
  mode.perPhotonForce = derivePerPhotonForce(p, c);
  mode.granularity = std::abs(mode.perPhotonForce) * mode.zHo / (c.hbar * p.kappa);
  return mode;
}

std::vector<GranularityPoint> granularityScan(const SystemParams& p,
                                              const PhysicalConstants& c,
                                              const std::vector<double>& detunings) {
  for (double d : detunings) {
    if (d == 0.0 || !std::isfinite(d))
      throw std::invalid_argument("granularityScan: every detuning must be finite and nonzero");
  }
  std::vector<GranularityPoint> out;
  out.reserve(detunings.size());
  SystemParams scanned = p;
  for (double d : detunings) {
    scanned.deltaCA = d;
    const CollectiveMode mode = deriveCollectiveMode(scanned, c);
    out.push_back({d, mode.granularity, mode.granularity > 1.0});
  }
  return out;
}

PhotonImpulse photonImpulseDisplacement(const CollectiveMode& mode, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  PhotonImpulse imp;
  imp.deltaP = mode.perPhotonForce / (2.0 * kappa);
  imp.deltaZ = imp.deltaP / (mode.mass * mode.omegaZ);
  return imp;
}

}  // namespace cavmech
