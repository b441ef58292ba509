#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cavmech/constants.hpp"
#include "cavmech/numerics.hpp"

namespace cavmech {

/// 1D optical lattice V(z) = depth * Er * sin^2(kT z), reciprocal lattice
/// vector 2 kT. Energies are expressed in recoil units Er = hbar^2 kT^2 / 2m,
/// quasimomentum in units of kT with first zone (-1, 1].
struct LatticeSpec {
  double depth = 0.0;                      // V0 in Er
  double kT = two_pi / 850e-9;             // trap wavenumber, rad/m
  double kP = two_pi / 780e-9;             // probe wavenumber, rad/m
  int planewaveCutoff = 16;                // basis e^{i(q+2n)kT z}, |n| <= cutoff

  int basisSize() const { return 2 * planewaveCutoff + 1; }
  void validate() const;
};

/// Extended-zone wavevector k (kT units) folded into the first zone:
/// k = q + 2 * fold with q in (-1, 1].
struct ZoneFold {
  double q = 0.0;
  long long fold = 0;
};

ZoneFold foldToFirstBz(double k);

/// Plane-wave Bloch Hamiltonian at quasimomentum q (kT units, first zone):
/// diagonal (q + 2n)^2 + depth/2, off-diagonal -depth/4 coupling n <-> n+1,
/// all in Er. The constant depth/2 term is the lattice mean potential
/// (sin^2 = 1/2 - cos/2), kept so absolute energies are physical.
Eigen::MatrixXcd blochHamiltonian(const LatticeSpec& spec, double q);

struct BandStructure {
  Eigen::VectorXd quasimomenta;  // kT units, uniform over (-1, 1]
  Eigen::MatrixXd energies;      // nBands x qGrid, Er, ascending per column
  std::vector<Eigen::MatrixXcd> blochCoefficients;  // per q: basisSize x nBands
};

BandStructure bandStructure(const LatticeSpec& spec, int qGrid, int nBands);

/// Relative weights with which the spatially periodic probe potential
/// cos(2 kP z) excites the bands at quasimomentum fold(2 kP / kT), starting
/// from the band-0, q=0 ground state. weights[i] is the excited band i+1
/// (band 0 at q* is the quasi-elastic same-band channel and is not an
/// excitation); normalized to sum 1 over the retained bands 1..nBands.
struct ExcitationWeights {
  double depth = 0.0;         // Er
  double quasimomentum = 0.0; // folded 2 kP, kT units
  Eigen::VectorXd weights;    // size nBands, bands 1..nBands
};

ExcitationWeights excitationWeights(const LatticeSpec& spec, int nBands);

/// Harmonic estimate 2 sqrt(depth) in Er for the band-0 -> band-1 spacing,
/// from expanding sin^2 about a lattice minimum. Diagnostic companion to the
/// exact gap out of bandStructure.
double deepLatticeGap(const LatticeSpec& spec);

}  // namespace cavmech
