#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "cavmech/params.hpp"
#include "cavmech/statics.hpp"

namespace testsupport {

// Shared reference system: 5e4 Rb-87 atoms, g0/2pi = 10 MHz, deltaCA/2pi =
// 100 GHz, kappa/2pi = 0.66 MHz, trap frequency set by hbar*omegaZ/kB = 2 uK.
inline cavmech::SystemParams referenceParams() {
  cavmech::SystemParams p;
  const cavmech::PhysicalConstants c;
  p.nEff = 5e4;
  p.g0 = cavmech::two_pi * 10e6;
  p.deltaCA = cavmech::two_pi * 100e9;
  p.kappa = cavmech::two_pi * 0.66e6;
  p.omegaZ = 2e-6 * c.kB / c.hbar;
  return p;
}

// Drive condition realizing the dimensionless point (delta, beta):
// nMax = beta M omegaZ^2 hbar kappa / F^2.
inline cavmech::DriveCondition driveFor(const cavmech::CollectiveMode& mode, double kappa,
                                        double delta, double beta) {
  const cavmech::PhysicalConstants c;
  const double f = mode.perPhotonForce;
  const double nMax = beta * mode.mass * mode.omegaZ * mode.omegaZ * c.hbar * kappa / (f * f);
  return {delta * kappa, nMax, kappa};
}

}  // namespace testsupport

// Test-only oracles; each is independent of the library code path it checks.
namespace oracle {

// Sign-change count of g(x) = x (1 + (delta - x)^2) - beta on a dense grid
// over the bracket used by the solver.
inline int bruteForceSolutionCount(double delta, double beta, int gridPoints = 100000) {
  const double lo = std::min(0.0, delta) - beta - 1.0;
  const double hi = std::max(0.0, delta) + beta + 1.0;
  const auto g = [delta, beta](double x) {
    const double w = delta - x;
    return x * (1.0 + w * w) - beta;
  };
  int count = 0;
  double prev = g(lo);
  for (int i = 1; i < gridPoints; ++i) {
    const double cur = g(lo + (hi - lo) * static_cast<double>(i) / (gridPoints - 1));
    if (prev * cur < 0.0) ++count;
    if (cur != 0.0) prev = cur;
  }
  return count;
}

// Classic fixed-step 4th-order Runge-Kutta for dy/dt = f(y).
inline double rk4(const std::function<double(double)>& f, double y0, double t, int steps) {
  const double h = t / steps;
  double y = y0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(y);
    const double k2 = f(y + 0.5 * h * k1);
    const double k3 = f(y + 0.5 * h * k2);
    const double k4 = f(y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

inline double centralDifference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
