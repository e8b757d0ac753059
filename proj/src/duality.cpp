#include "sievelab/duality.hpp"

#include <cmath>
#include <stdexcept>

#include "sievelab/errors.hpp"

namespace sievelab {

namespace {

constexpr int kMaxIterations = 100000;

}  // namespace

double forward_constant(const ComplexMatrix& T, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("forward_constant: tol must be positive");
  if (T.size() == 0) return 0.0;
  if (!T.allFinite())
    throw std::invalid_argument("forward_constant: non-finite matrix entries");

  const Eigen::Index k = T.cols();

  // Deterministic start: all ones plus a tiny ramp so the vector is never
  // orthogonal to the top eigenspace for the matrices we care about.
  Eigen::VectorXcd v(k);
  for (Eigen::Index i = 0; i < k; ++i)
    v[i] = 1.0 + 1e-3 * static_cast<double>(i + 1) / static_cast<double>(k);
  v.normalize();

  double lambda = 0.0;
  int quiet = 0;  // consecutive iterations with relative change below tol
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Eigen::VectorXcd w = T.adjoint() * (T * v);
    double wn = w.norm();
    if (wn == 0.0) {
      // v landed exactly in the kernel of T^H T; probe basis vectors.
      bool found = false;
      for (Eigen::Index j = 0; j < k && !found; ++j) {
        v.setZero();
        v[j] = 1.0;
        w = T.adjoint() * (T * v);
        wn = w.norm();
        if (wn > 0.0) found = true;
      }
      if (!found) return 0.0;  // T^H T = 0, so T = 0
    }
    double next = v.dot(w).real();  // Rayleigh quotient, v has unit norm
    if (!std::isfinite(next))
      throw invariant_violation_error(
          "forward_constant: power iteration produced non-finite values");
    double denom = std::max(std::abs(next), 1e-300);
    if (std::abs(next - lambda) <= tol * denom) {
      if (++quiet >= 3) return next;
    } else {
      quiet = 0;
    }
    lambda = next;
    v = w / wn;
  }
  throw convergence_error("forward_constant: no convergence within " +
                          std::to_string(kMaxIterations) + " iterations");
}

double dual_constant(const ComplexMatrix& T, double tol) {
  return forward_constant(T.adjoint(), tol);
}

double duality_gap(const ComplexMatrix& T, double tol) {
  double f = forward_constant(T, tol);
  double d = dual_constant(T, tol);
  double gap = std::abs(f - d) / std::max(f, 1e-300);
  if (gap > 10.0 * tol)
    throw invariant_violation_error(
        "duality gap " + std::to_string(gap) + " exceeds 10*tol (forward " +
        std::to_string(f) + ", dual " + std::to_string(d) + ")");
  return gap;
}

}  // namespace sievelab
