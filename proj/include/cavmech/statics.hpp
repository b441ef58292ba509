#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cavmech/params.hpp"

namespace cavmech {

/// Probe drive relative to the atom-shifted cavity resonance.
struct DriveCondition {
  double deltaPC = 0.0;  // rad/s
  double nMax = 0.0;     // intracavity photons when driven on resonance
  double kappa = 0.0;    // rad/s

  void validate() const;
};

/// Self-consistent displacement/photon pair with its stability label.
struct Equilibrium {
  double z = 0.0;        // m
  double photons = 0.0;  // dimensionless
  bool stable = false;
  std::optional<double> omegaEff;  // rad/s, populated for stable points only
};

struct EquilibriumSet {
  std::vector<Equilibrium> solutions;  // ascending in z; stability alternates
};

enum class SweepDirection { Up, Down };

struct SweepPoint {
  double deltaPC = 0.0;  // rad/s
  double z = 0.0;        // m
  double photons = 0.0;  // dimensionless (absolute; normalize by nMax to report)
  bool branchJump = false;
};

struct SweepTrace {
  std::vector<SweepPoint> points;
};

/// Conservative force on the collective mode: -M omegaZ^2 z + F photons.
double optoForce(double z, double photons, const CollectiveMode& mode);

/// Lorentzian response nMax kappa^2 / (kappa^2 + (deltaPC - F z / hbar)^2).
double intracavityPhotons(double z, const DriveCondition& d, const CollectiveMode& mode,
                          const PhysicalConstants& c = {});

/// U(z) = 1/2 M omegaZ^2 z^2 + nMax hbar kappa arctan((deltaPC - F z/hbar)/kappa).
double optomechPotential(double z, const DriveCondition& d, const CollectiveMode& mode,
                         const PhysicalConstants& c = {});

/// All self-consistent equilibria for one drive condition. Works in the
/// dimensionless fixed point x = beta / (1 + (delta - x)^2) with
/// x = F z/(hbar kappa), delta = deltaPC/kappa, beta = 2 eps^2 (kappa/omegaZ) nMax,
/// then maps back to z and classifies stability by the sign of U''.
EquilibriumSet equilibria(const DriveCondition& d, const CollectiveMode& mode,
                          const PhysicalConstants& c = {});

/// Effective mechanical frequency sqrt(U''(z)/M) at a stable equilibrium.
/// Throws std::invalid_argument if eq is unstable or U'' <= 0.
double opticalSpringShift(const Equilibrium& eq, const DriveCondition& d,
                          const CollectiveMode& mode, const PhysicalConstants& c = {});

/// Quasi-static branch following over a monotone detuning schedule (fixed
/// nMax and kappa). Starts on the stable solution with smallest |z|; keeps
/// the stable solution nearest the previous z while it remains within the
/// continuity tolerance (0.2 x local branch spacing), otherwise jumps to the
/// globally nearest stable solution and flags branchJump.
SweepTrace transmissionSweep(const std::vector<DriveCondition>& schedule,
                             SweepDirection direction, const CollectiveMode& mode,
                             const PhysicalConstants& c = {});

/// Solution counts over a (deltaPC, nMax) grid; cells with count 3 form the
/// bistable region. Row i <-> deltaGrid[i], column j <-> nMaxGrid[j].
Eigen::MatrixXi bistabilityMap(const std::vector<double>& deltaGrid,
                               const std::vector<double>& nMaxGrid,
                               const CollectiveMode& mode, double kappa,
                               const PhysicalConstants& c = {});

}  // namespace cavmech
