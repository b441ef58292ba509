#include "cavmech/statics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cavmech/numerics.hpp"

namespace cavmech {

namespace {

// beta = 2 eps^2 (kappa/omegaZ) nMax, written via F so it stays consistent
// with the drive's kappa: beta = F^2 nMax / (M omegaZ^2 hbar kappa).
double reducedDrive(const DriveCondition& d, const CollectiveMode& mode,
                    const PhysicalConstants& c) {
  const double f = mode.perPhotonForce;
  return f * f * d.nMax / (mode.mass * mode.omegaZ * mode.omegaZ * c.hbar * d.kappa);
}

// U'' / (M omegaZ^2) at dimensionless displacement x.
double curvature(double x, double delta, double beta) {
  const double w = delta - x;
  const double lorentz = 1.0 + w * w;
  return 1.0 - 2.0 * beta * w / (lorentz * lorentz);
}

}  // namespace

void DriveCondition::validate() const {
  if (!std::isfinite(deltaPC)) throw std::invalid_argument("DriveCondition: deltaPC must be finite");
  if (!(nMax >= 0.0)) throw std::invalid_argument("DriveCondition: nMax must be >= 0");
  if (!(kappa > 0.0)) throw std::invalid_argument("DriveCondition: kappa must be positive");
}

double optoForce(double z, double photons, const CollectiveMode& mode) {
  return -mode.mass * mode.omegaZ * mode.omegaZ * z + mode.perPhotonForce * photons;
}

double intracavityPhotons(double z, const DriveCondition& d, const CollectiveMode& mode,
                          const PhysicalConstants& c) {
  d.validate();
  const double detuned = d.deltaPC - mode.perPhotonForce * z / c.hbar;
  return d.nMax * d.kappa * d.kappa / (d.kappa * d.kappa + detuned * detuned);
}

double optomechPotential(double z, const DriveCondition& d, const CollectiveMode& mode,
                         const PhysicalConstants& c) {
  d.validate();
  const double harmonic = 0.5 * mode.mass * mode.omegaZ * mode.omegaZ * z * z;
  const double detuned = d.deltaPC - mode.perPhotonForce * z / c.hbar;
  return harmonic + d.nMax * c.hbar * d.kappa * std::atan(detuned / d.kappa);
}

EquilibriumSet equilibria(const DriveCondition& d, const CollectiveMode& mode,
                          const PhysicalConstants& c) {
  d.validate();
  const double f = mode.perPhotonForce;

  EquilibriumSet set;
  if (f == 0.0) {
    // Decoupled mode: the harmonic origin is the only equilibrium.
    set.solutions.push_back({0.0, intracavityPhotons(0.0, d, mode, c), true, mode.omegaZ});
    return set;
  }

  const double delta = d.deltaPC / d.kappa;
  const double beta = reducedDrive(d, mode, c);
  const auto residual = [delta, beta](double x) {
    const double w = delta - x;
    return x * (1.0 + w * w) - beta;
  };

  const double lo = std::min(0.0, delta) - beta - 1.0;
  const double hi = std::max(0.0, delta) + beta + 1.0;
  std::vector<double> roots = findRealRoots(residual, lo, hi, 4096);

  // Newton polish within the bisection bracket width; keeps the force
  // residual at machine level even when |x| is small.
  const double maxStep = 4e-12 * (hi - lo);
  for (double& x : roots) {
    for (int it = 0; it < 4; ++it) {
      const double w = delta - x;
      const double slope = 1.0 + w * w - 2.0 * x * w;
      if (slope == 0.0) break;
      const double step = residual(x) / slope;
      if (!std::isfinite(step) || std::abs(step) > maxStep) break;
      x -= step;
    }
  }

  for (double x : roots) {
    Equilibrium eq;
    eq.z = x * c.hbar * d.kappa / f;
    eq.photons = intracavityPhotons(eq.z, d, mode, c);
    const double curv = curvature(x, delta, beta);
    eq.stable = curv > 0.0;
    if (eq.stable) eq.omegaEff = mode.omegaZ * std::sqrt(curv);
    set.solutions.push_back(eq);
  }
  std::sort(set.solutions.begin(), set.solutions.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.z < b.z; });
  return set;
}

double opticalSpringShift(const Equilibrium& eq, const DriveCondition& d,
                          const CollectiveMode& mode, const PhysicalConstants& c) {
  if (!eq.stable) throw std::invalid_argument("opticalSpringShift: equilibrium is unstable");
  d.validate();
  const double f = mode.perPhotonForce;
  const double x = f * eq.z / (c.hbar * d.kappa);
  const double curv = curvature(x, d.deltaPC / d.kappa, reducedDrive(d, mode, c));
  if (!(curv > 0.0))
    throw std::invalid_argument("opticalSpringShift: U'' <= 0 at the supplied point");
  return mode.omegaZ * std::sqrt(curv);
}

SweepTrace transmissionSweep(const std::vector<DriveCondition>& schedule,
                             SweepDirection direction, const CollectiveMode& mode,
                             const PhysicalConstants& c) {
  SweepTrace trace;
  if (schedule.empty()) return trace;

  for (std::size_t i = 1; i < schedule.size(); ++i) {
    const bool ordered = direction == SweepDirection::Up
                             ? schedule[i].deltaPC >= schedule[i - 1].deltaPC
                             : schedule[i].deltaPC <= schedule[i - 1].deltaPC;
    if (!ordered)
      throw std::invalid_argument("transmissionSweep: schedule not monotone for direction");
    if (schedule[i].nMax != schedule[0].nMax || schedule[i].kappa != schedule[0].kappa)
      throw std::invalid_argument("transmissionSweep: nMax and kappa must be fixed");
  }

  trace.points.reserve(schedule.size());
  double zPrev = 0.0;
  std::vector<double> prevStable;

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const EquilibriumSet set = equilibria(schedule[i], mode, c);
    std::vector<const Equilibrium*> stable;
    for (const Equilibrium& eq : set.solutions)
      if (eq.stable) stable.push_back(&eq);
    if (stable.empty())
      throw std::runtime_error("transmissionSweep: no stable equilibrium found");

    const Equilibrium* chosen = nullptr;
    bool jump = false;
    if (i == 0) {
      chosen = *std::min_element(stable.begin(), stable.end(),
                                 [](const Equilibrium* a, const Equilibrium* b) {
                                   return std::abs(a->z) < std::abs(b->z);
                                 });
    } else {
      chosen = *std::min_element(stable.begin(), stable.end(),
                                 [zPrev](const Equilibrium* a, const Equilibrium* b) {
                                   return std::abs(a->z - zPrev) < std::abs(b->z - zPrev);
                                 });
      const double moved = std::abs(chosen->z - zPrev);
      double spacing = 0.0;
      if (stable.size() >= 2) {
        spacing = std::numeric_limits<double>::infinity();
        for (const Equilibrium* s : stable)
          if (s != chosen) spacing = std::min(spacing, std::abs(s->z - chosen->z));
      } else if (prevStable.size() >= 2) {
        // Occupied branch may have folded away; measure against the spacing
        // it had at the previous step.
        spacing = std::numeric_limits<double>::infinity();
        for (double s : prevStable)
          if (s != zPrev) spacing = std::min(spacing, std::abs(s - zPrev));
      }
      if (spacing > 0.0 && std::isfinite(spacing)) jump = moved > 0.2 * spacing;
    }

    trace.points.push_back({schedule[i].deltaPC, chosen->z, chosen->photons, jump});
    zPrev = chosen->z;
    prevStable.clear();
    for (const Equilibrium* s : stable) prevStable.push_back(s->z);
  }
  return trace;
}

Eigen::MatrixXi bistabilityMap(const std::vector<double>& deltaGrid,
                               const std::vector<double>& nMaxGrid,
                               const CollectiveMode& mode, double kappa,
                               const PhysicalConstants& c) {
  if (deltaGrid.empty() || nMaxGrid.empty())
    throw std::invalid_argument("bistabilityMap: grids must be nonempty");
  Eigen::MatrixXi counts(static_cast<Eigen::Index>(deltaGrid.size()),
                         static_cast<Eigen::Index>(nMaxGrid.size()));
  for (std::size_t i = 0; i < deltaGrid.size(); ++i) {
    for (std::size_t j = 0; j < nMaxGrid.size(); ++j) {
      const DriveCondition d{deltaGrid[i], nMaxGrid[j], kappa};
      counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<int>(equilibria(d, mode, c).solutions.size());
    }
  }
  return counts;
}

}  // namespace cavmech
