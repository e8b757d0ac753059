#pragma once

#include <Eigen/Dense>

namespace sievelab {

using ComplexMatrix = Eigen::MatrixXcd;

// Least admissible constant D in
//   sum_m |sum_n a_n t_mn|^2 <= D sum_n |a_n|^2,
// i.e. the squared largest singular value of T, via power iteration on
// the Gram form with a deterministic start vector.  Rectangular matrices
// are accepted.  Throws std::invalid_argument on non-finite entries and
// convergence_error after 1e5 iterations without the relative change
// dropping below tol.
double forward_constant(const ComplexMatrix& T, double tol);

// Same constant for the conjugate-transpose form
//   sum_n |sum_m b_m t_mn|^2 <= D sum_m |b_m|^2.
double dual_constant(const ComplexMatrix& T, double tol);

// |forward - dual| / max(forward, tiny).  The two constants are equal in
// exact arithmetic; a gap above 10*tol throws invariant_violation_error.
double duality_gap(const ComplexMatrix& T, double tol);

}  // namespace sievelab
