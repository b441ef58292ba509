#pragma once

#include <numbers>

namespace cavmech {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Fundamental constants, SI units (CODATA values).
struct PhysicalConstants {
  double hbar = 1.054571817e-34;       // J s
  double kB = 1.380649e-23;            // J / K
  double atomMassRb87 = 1.44316e-25;   // kg

  void validate() const;
};

}  // namespace cavmech
