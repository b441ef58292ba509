#include "cavmech/backaction.hpp"

#include <cmath>
#include <stdexcept>

#include "cavmech/numerics.hpp"

namespace cavmech {

namespace {

// kappa^2 eps^2 = (F zHo / hbar)^2; kappa cancels, so the prefactor stays
// consistent whatever kappa the drive carries.
double ratePrefactor(const CollectiveMode& mode, const PhysicalConstants& c) {
  const double s = mode.perPhotonForce * mode.zHo / c.hbar;
  return s * s;
}

}  // namespace

SpectralPair spectralDensities(const DriveCondition& d, double meanPhotons, double omegaZ) {
  d.validate();
  if (!(meanPhotons >= 0.0))
    throw std::invalid_argument("spectralDensities: meanPhotons must be >= 0");
  if (!(omegaZ > 0.0)) throw std::invalid_argument("spectralDensities: omegaZ must be positive");

  const double k2 = d.kappa * d.kappa;
  const double lower = d.deltaPC - omegaZ;
  const double upper = d.deltaPC + omegaZ;
  SpectralPair s;
  s.meanPhotons = meanPhotons;
  s.sMinus = 2.0 * meanPhotons * d.kappa / (k2 + lower * lower);
  s.sPlus = 2.0 * meanPhotons * d.kappa / (k2 + upper * upper);
  return s;
}

BackactionRates backactionRates(const DriveCondition& d, const CollectiveMode& mode,
                                double meanPhotons, const PhysicalConstants& c) {
  const SpectralPair s = spectralDensities(d, meanPhotons, mode.omegaZ);
  const double pre = ratePrefactor(mode, c);
  BackactionRates rates;
  rates.diffusion = pre * s.sMinus;
  rates.dynamical = pre * (s.sMinus - s.sPlus);
  if (rates.dynamical < 0.0) rates.steadyPhonons = s.sMinus / (s.sPlus - s.sMinus);
  return rates;
}

double energyRate(double phonons, const DriveCondition& d, const CollectiveMode& mode,
                  double meanPhotons, const PhysicalConstants& c) {
  if (!(phonons >= 0.0)) throw std::invalid_argument("energyRate: phonons must be >= 0");
  const SpectralPair s = spectralDensities(d, meanPhotons, mode.omegaZ);
  return ratePrefactor(mode, c) * (s.sMinus + (s.sMinus - s.sPlus) * phonons);
}

double evolvePhonons(double n0, double t, const DriveCondition& d, const CollectiveMode& mode,
                     double meanPhotons, const PhysicalConstants& c) {
  if (!(n0 >= 0.0)) throw std::invalid_argument("evolvePhonons: n0 must be >= 0");
  const SpectralPair s = spectralDensities(d, meanPhotons, mode.omegaZ);
  const double pre = ratePrefactor(mode, c);
  const double value = integrateLinearOde(pre * s.sMinus, pre * (s.sMinus - s.sPlus), n0, t);
  return std::max(0.0, value);
}

FieldResponse fieldResponse(double deltaZ, const DriveCondition& d, const CollectiveMode& mode,
                            const PhysicalConstants& c) {
  d.validate();
  const double shift = mode.perPhotonForce * deltaZ / c.hbar;
  FieldResponse r;
  r.ratio = std::complex<double>(0.0, 1.0) / std::complex<double>(d.kappa, -d.deltaPC) * shift;
  r.beyondLinearRegime = std::abs(shift) > 0.1 * d.kappa;
  return r;
}

double sensitivityBackactionCheck(const std::vector<double>& deltaPcGrid, double kappa,
                                  const CollectiveMode& mode, double meanPhotons,
                                  double omegaZ, const PhysicalConstants& c) {
  if (!(kappa > 0.0))
    throw std::invalid_argument("sensitivityBackactionCheck: kappa must be positive");
  if (!(omegaZ / kappa <= 1e-2))
    throw std::invalid_argument("sensitivityBackactionCheck: requires omegaZ/kappa <= 1e-2");
  if (!(meanPhotons > 0.0))
    throw std::invalid_argument("sensitivityBackactionCheck: meanPhotons must be positive");
  if (mode.perPhotonForce == 0.0)
    throw std::invalid_argument("sensitivityBackactionCheck: mode carries no per-photon force");

  // Probe displacement well inside the linear regime; it cancels in A/A(0).
  const double deltaZ = 1e-3 * c.hbar * kappa / std::abs(mode.perPhotonForce);

  const auto sensitivity = [&](double deltaPC) {
    const DriveCondition d{deltaPC, 1.0, kappa};
    return std::norm(fieldResponse(deltaZ, d, mode, c).ratio);
  };
  const auto diffusionProfile = [&](double deltaPC) {
    const DriveCondition d{deltaPC, 1.0, kappa};
    return spectralDensities(d, meanPhotons, omegaZ).sMinus;
  };

  const double a0 = sensitivity(0.0);
  const double b0 = diffusionProfile(0.0);
  double worst = 0.0;
  for (double deltaPC : deltaPcGrid) {
    const double mismatch = std::abs(sensitivity(deltaPC) / a0 - diffusionProfile(deltaPC) / b0);
    worst = std::max(worst, mismatch);
  }
  return worst;
}

}  // namespace cavmech
