#include "cavmech/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace cavmech {

void LatticeSpec::validate() const {
  if (!(depth >= 0.0) || !std::isfinite(depth))
    throw std::invalid_argument("LatticeSpec: depth must be >= 0 and finite");
  if (planewaveCutoff < 8) throw std::invalid_argument("LatticeSpec: planewaveCutoff must be >= 8");
  if (!(kT > 0.0)) throw std::invalid_argument("LatticeSpec: kT must be positive");
  if (!(kP > 0.0)) throw std::invalid_argument("LatticeSpec: kP must be positive");
}

ZoneFold foldToFirstBz(double k) {
  if (!std::isfinite(k)) throw std::invalid_argument("foldToFirstBz: k must be finite");
  double fold = std::ceil((k - 1.0) / 2.0);
  double q = k - 2.0 * fold;
  if (q <= -1.0) {
    q += 2.0;
    fold -= 1.0;
  } else if (q > 1.0) {
    q -= 2.0;
    fold += 1.0;
  }
  return {q, static_cast<long long>(fold)};
}

Eigen::MatrixXcd blochHamiltonian(const LatticeSpec& spec, double q) {
  spec.validate();
  if (!(q > -1.0) || !(q <= 1.0))
    throw std::invalid_argument("blochHamiltonian: q must lie in (-1, 1]; fold first");

  const int dim = spec.basisSize();
  const int c = spec.planewaveCutoff;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double n = static_cast<double>(i - c);
    h(i, i) = (q + 2.0 * n) * (q + 2.0 * n) + 0.5 * spec.depth;
    if (i + 1 < dim) {
      h(i, i + 1) = -0.25 * spec.depth;
      h(i + 1, i) = -0.25 * spec.depth;
    }
  }
  return h;
}

BandStructure bandStructure(const LatticeSpec& spec, int qGrid, int nBands) {
  spec.validate();
  if (qGrid < 2) throw std::invalid_argument("bandStructure: qGrid must be >= 2");
  if (nBands < 1) throw std::invalid_argument("bandStructure: nBands must be >= 1");
  if (nBands > 2 * spec.planewaveCutoff)
    throw std::invalid_argument("bandStructure: nBands must be <= 2 * planewaveCutoff");

  BandStructure bs;
  bs.quasimomenta.resize(qGrid);
  bs.energies.resize(nBands, qGrid);
  bs.blochCoefficients.reserve(qGrid);

  for (int j = 0; j < qGrid; ++j) {
    const double q = -1.0 + 2.0 * static_cast<double>(j + 1) / qGrid;
    bs.quasimomenta[j] = q;
    const EigenDecomposition dec = hermitianEigen(blochHamiltonian(spec, q));
    bs.energies.col(j) = dec.values.head(nBands);
    bs.blochCoefficients.push_back(dec.vectors.leftCols(nBands));
  }
  return bs;
}

ExcitationWeights excitationWeights(const LatticeSpec& spec, int nBands) {
  spec.validate();
  if (nBands < 3) throw std::invalid_argument("excitationWeights: nBands must be >= 3");
  if (nBands + 1 > spec.basisSize())
    throw std::invalid_argument("excitationWeights: basis too small for requested bands");

  const ZoneFold folded = foldToFirstBz(2.0 * spec.kP / spec.kT);
  const int dim = spec.basisSize();

  const EigenDecomposition ground = hermitianEigen(blochHamiltonian(spec, 0.0));
  const EigenDecomposition excited = hermitianEigen(blochHamiltonian(spec, folded.q));
  const Eigen::VectorXcd g = ground.vectors.col(0);

  // <q*; i| e^{+i 2 kP z} |g>: the exponential shifts the ground plane-wave
  // component n to n + fold in the q* sector. The e^{-i 2 kP z} branch lands
  // at -q* and carries identical weights by parity, so one branch suffices.
  ExcitationWeights w;
  w.depth = spec.depth;
  w.quasimomentum = folded.q;
  w.weights.resize(nBands);
  const long long shift = folded.fold;
  for (int band = 1; band <= nBands; ++band) {
    std::complex<double> amp = 0.0;
    for (int n = 0; n < dim; ++n) {
      const long long m = n + shift;
      if (m >= 0 && m < dim) amp += std::conj(excited.vectors(m, band)) * g(n);
    }
    w.weights[band - 1] = std::norm(amp);
  }

  const double total = w.weights.sum();
  if (!(total > 0.0))
    throw std::runtime_error("excitationWeights: no spectral weight in retained bands");
  w.weights /= total;
  return w;
}

double deepLatticeGap(const LatticeSpec& spec) {
  spec.validate();
  return 2.0 * std::sqrt(spec.depth);
}

}  // namespace cavmech
