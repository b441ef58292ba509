#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cavmech {

/// Result of a dense Hermitian eigensolve: eigenvalues ascending, eigenvector
/// columns orthonormal and phase-fixed (largest-magnitude component of each
/// column made real positive) so repeated runs are bit-identical.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Full decomposition of a Hermitian matrix (dim <= 512).
/// Throws std::invalid_argument on non-Hermitian input and std::runtime_error
/// (with the worst residual in the message) if the solve does not converge or
/// fails the residual check |H v - lambda v| < 1e-9 |lambda_max|.
EigenDecomposition hermitianEigen(const Eigen::MatrixXcd& h);

/// Scans a uniform grid on [lo, hi] for sign changes of f and refines each
/// bracket by bisection until the bracket is shorter than 1e-12 (hi - lo).
/// Returns ascending roots, deduplicated within 1e-10 (hi - lo). Roots of even
/// multiplicity between grid nodes are missed.
template <class F>
std::vector<double> findRealRoots(F&& f, double lo, double hi, int gridPoints) {
  if (!(lo < hi)) throw std::invalid_argument("findRealRoots: requires lo < hi");
  if (gridPoints < 2) throw std::invalid_argument("findRealRoots: requires gridPoints >= 2");

  const double span = hi - lo;
  std::vector<double> roots;
  double xPrev = lo;
  double fPrev = f(lo);
  if (!std::isfinite(fPrev)) throw std::invalid_argument("findRealRoots: f not finite on [lo, hi]");
  if (fPrev == 0.0) roots.push_back(lo);

  for (int i = 1; i < gridPoints; ++i) {
    const double x = lo + span * static_cast<double>(i) / (gridPoints - 1);
    const double fx = f(x);
    if (!std::isfinite(fx)) throw std::invalid_argument("findRealRoots: f not finite on [lo, hi]");
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (fPrev != 0.0 && std::signbit(fx) != std::signbit(fPrev)) {
      double a = xPrev, b = x, fa = fPrev;
      for (int iter = 0; iter < 200 && (b - a) >= 1e-12 * span; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    xPrev = x;
    fPrev = fx;
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > 1e-10 * span) unique.push_back(r);
  }
  return unique;
}

/// Closed-form solution of dy/dt = a + b y at time t >= 0, with a series
/// branch for |b t| <= 1e-12 to stay continuous through b -> 0.
double integrateLinearOde(double a, double b, double y0, double t);

}  // namespace cavmech
