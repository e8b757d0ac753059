#pragma once

#include <cstdint>
#include <span>

namespace sievelab {

// phi(x) = (sin(pi x) / (2x))^2, with the removable singularity filled:
// phi(0) = pi^2/4.  Nonnegative, even, phi(x) <= 1/(4x^2) for x != 0.
double fejer_phi(double x);

// Lambda(s) = max(1 - |s|, 0).
double triangle(double s);

// Closed form of the periodized kernel V(y) = sum_m phi(m/(2N)) e(my):
// (pi^2 N / 2) (1 - 2N d) when d = distance of y to the nearest integer
// is below 1/(2N), else 0.
double v_closed(double y, std::int64_t N);

// Truncated-sum oracle for v_closed: real part of
// sum_{|m| <= K} phi(m/(2N)) e(my), accumulated term by term.  The
// imaginary part must cancel by even symmetry; a residue above 1e-10
// throws invariant_violation_error.  K = 0 leaves the single m = 0 term.
double v_truncated(double y, std::int64_t N, std::int64_t K);

// prod_i phi(alpha_i / (2N)).  At least 1 whenever max|alpha_i| <= N.
double kernel_weight(std::span<const std::int64_t> alpha, std::int64_t N);

}  // namespace sievelab
