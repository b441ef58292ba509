#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cavmech/statics.hpp"

namespace cavmech {

/// Photon-number spectral densities at the two mechanical sidebands of a
/// coherent-state-driven cavity:
///   S(+-) = 2 <n> kappa / (kappa^2 + (deltaPC +- omegaZ)^2),
/// sMinus taken at (deltaPC - omegaZ) and sPlus at (deltaPC + omegaZ).
struct SpectralPair {
  double sMinus = 0.0;  // 1/(rad/s)
  double sPlus = 0.0;   // 1/(rad/s)
  double meanPhotons = 0.0;
};

SpectralPair spectralDensities(const DriveCondition& d, double meanPhotons, double omegaZ);

/// Coefficients of the mean phonon-number rate equation
///   d<n>/dt = diffusion + dynamical * <n>,
/// with diffusion = kappa^2 eps^2 S- and dynamical = kappa^2 eps^2 (S- - S+),
/// both in rad/s. dynamical < 0 is cavity cooling; only then does the steady
/// state sMinus/(sPlus - sMinus) exist (nullopt marks the divergent regime).
struct BackactionRates {
  double diffusion = 0.0;
  double dynamical = 0.0;
  std::optional<double> steadyPhonons;
};

BackactionRates backactionRates(const DriveCondition& d, const CollectiveMode& mode,
                                double meanPhotons, const PhysicalConstants& c = {});

/// d<a^dag a>/dt at the given phonon number, rad/s.
double energyRate(double phonons, const DriveCondition& d, const CollectiveMode& mode,
                  double meanPhotons, const PhysicalConstants& c = {});

/// Closed-form phonon evolution of the linear rate equation; result >= 0.
double evolvePhonons(double n0, double t, const DriveCondition& d, const CollectiveMode& mode,
                     double meanPhotons, const PhysicalConstants& c = {});

/// First-order cavity field response E_sig/E_0 = i/(kappa - i deltaPC) * F deltaZ/hbar.
/// beyondLinearRegime flags |F deltaZ/hbar| > 0.1 kappa, where the expansion
/// starts to strain.
struct FieldResponse {
  std::complex<double> ratio;
  bool beyondLinearRegime = false;
};

FieldResponse fieldResponse(double deltaZ, const DriveCondition& d, const CollectiveMode& mode,
                            const PhysicalConstants& c = {});

/// Max-norm mismatch between the normalized displacement-sensitivity profile
/// |E_sig/E_0|^2 and the normalized diffusion profile S- over a deltaPC grid
/// at constant meanPhotons. Both reduce to the same Lorentzian as
/// omegaZ/kappa -> 0; requires omegaZ/kappa <= 1e-2.
double sensitivityBackactionCheck(const std::vector<double>& deltaPcGrid, double kappa,
                                  const CollectiveMode& mode, double meanPhotons,
                                  double omegaZ, const PhysicalConstants& c = {});

}  // namespace cavmech
