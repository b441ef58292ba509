#include "cavmech/numerics.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace cavmech {

namespace {

void checkHermitian(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitianEigen: matrix must be square");
  if (h.rows() == 0) throw std::invalid_argument("hermitianEigen: matrix must be nonempty");
  if (h.rows() > 512) throw std::invalid_argument("hermitianEigen: dim must be <= 512");
  const double scale = h.cwiseAbs().maxCoeff();
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-14 * std::max(scale, 1.0)) {
    std::ostringstream msg;
    msg << "hermitianEigen: input is not Hermitian (max |H - H^dag| = " << asym << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Largest-magnitude component of each column made real positive; ties broken
// by the lowest row index, so the convention is deterministic.
void fixPhases(Eigen::MatrixXcd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double m = std::abs(vectors(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best > 0.0) {
      const std::complex<double> phase = vectors(imax, j) / best;
      vectors.col(j) /= phase;
    }
  }
}

}  // namespace

EigenDecomposition hermitianEigen(const Eigen::MatrixXcd& h) {
  checkHermitian(h);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitianEigen: eigensolver did not converge");
  }

  EigenDecomposition dec;
  dec.values = solver.eigenvalues();
  dec.vectors = solver.eigenvectors();
  fixPhases(dec.vectors);

  const double lambdaMax = dec.values.cwiseAbs().maxCoeff();
  const double residual =
      (h * dec.vectors - dec.vectors * dec.values.asDiagonal()).cwiseAbs().maxCoeff();
  if (residual > 1e-9 * std::max(lambdaMax, 1e-300)) {
    std::ostringstream msg;
    msg << "hermitianEigen: residual " << residual << " exceeds 1e-9 * |lambda_max| ("
        << lambdaMax << ")";
    throw std::runtime_error(msg.str());
  }
  return dec;
}

double integrateLinearOde(double a, double b, double y0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("integrateLinearOde: requires t >= 0");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrateLinearOde: rates must be finite");

  if (std::abs(b * t) > 1e-12) {
    const double drift = a / b;
    return (y0 + drift) * std::exp(b * t) - drift;
  }
  return y0 + a * t + 0.5 * a * b * t * t;
}

}  // namespace cavmech
