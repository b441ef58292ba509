#pragma once

#include <vector>

#include "cavmech/constants.hpp"

namespace cavmech {

/// Physical inputs describing the atoms-cavity system, SI units throughout.
/// All frequencies are angular (rad/s).
struct SystemParams {
  double nEff = 0.0;            // effective atom number (dimensionless)
  double g0 = 0.0;              // single-atom coupling, rad/s
  double deltaCA = 0.0;         // atom-cavity detuning, rad/s, signed
  double kappa = 0.0;           // cavity half-linewidth, rad/s
  double omegaZ = 0.0;          // mechanical trap frequency, rad/s
  double lambdaProbe = 780e-9;  // probe wavelength, m
  double lambdaTrap = 850e-9;   // trap wavelength, m

  double probeWavenumber() const { return two_pi / lambdaProbe; }
  double trapWavenumber() const { return two_pi / lambdaTrap; }

  bool operator==(const SystemParams&) const = default;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Collective mechanical mode of the trapped ensemble.
///
/// The ensemble couples to the cavity through a single harmonic mode of
/// mass M = nEff * m(Rb87). The per-photon force carries the sign of
/// 1/deltaCA; the granularity parameter uses its magnitude:
///   epsilon = |F| zHo / (hbar kappa),  zHo = sqrt(hbar / (2 M omegaZ)).
struct CollectiveMode {
  double mass = 0.0;            // kg
  double omegaZ = 0.0;          // rad/s
  double zHo = 0.0;             // harmonic-oscillator length, m
  double perPhotonForce = 0.0;  // N, signed
  double granularity = 0.0;     // dimensionless
};

struct GranularityPoint {
  double deltaCA = 0.0;  // rad/s
  double epsilon = 0.0;
  bool granular = false;  // epsilon > 1
};

/// Impulse and displacement of the collective mode from one photon transit.
struct PhotonImpulse {
  double deltaP = 0.0;  // kg m/s
  double deltaZ = 0.0;  // m
};

/// F = nEff * hbar * kProbe * g0^2 / deltaCA. Throws on deltaCA == 0.
double derivePerPhotonForce(const SystemParams& p, const PhysicalConstants& c = {});

/// Throws on nEff == 0 (no mechanical mode exists).
CollectiveMode deriveCollectiveMode(const SystemParams& p, const PhysicalConstants& c = {});

/// epsilon(deltaCA) at fixed other parameters; every detuning must be nonzero.
std::vector<GranularityPoint> granularityScan(const SystemParams& p,
                                              const PhysicalConstants& c,
                                              const std::vector<double>& detunings);

/// deltaP = F / (2 kappa), deltaZ = deltaP / (M omegaZ).
PhotonImpulse photonImpulseDisplacement(const CollectiveMode& mode, double kappa);

}  // namespace cavmech
