#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "sievelab/coeff_box.hpp"
#include "sievelab/fraction.hpp"
#include "sievelab/torus.hpp"

namespace sievelab {

// e(t) = exp(2 pi i t).  The rational overload reduces mod 1 exactly
// before touching floating point.
std::complex<double> unit_phase(double t);
std::complex<double> unit_phase(const Fraction& t);

// Walks the box max|alpha_i| <= R in flat row-major order (coordinate 0
// slowest, last coordinate fastest, matching CoeffBox), calling
// fn(flat_index, e(alpha . beta)).  alpha . beta is reduced mod 1 in
// integer arithmetic over the common denominator ord(beta), so phases
// stay exact for arbitrarily large |alpha|.  Callers are responsible for
// keeping (2R+1)^n within memory/time budget.
template <typename Fn>
void for_each_box_phase(const TorusPoint& beta, std::int64_t R, Fn&& fn) {
  const int n = beta.dim();
  const std::int64_t D = beta.order;
  const std::int64_t side = 2 * R + 1;

  std::vector<std::complex<double>> table(static_cast<std::size_t>(D));
  for (std::int64_t j = 0; j < D; ++j)
    table[static_cast<std::size_t>(j)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                            static_cast<double>(D));

  // Per coordinate: alpha_i advances the phase numerator by
  // a_i (D / q_i) mod D; the walk keeps prefix sums of those indices.
  std::vector<std::int64_t> step(static_cast<std::size_t>(n));
  std::vector<std::int64_t> start(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Fraction& f = beta.coords[static_cast<std::size_t>(i)];
    std::int64_t s = (f.num * (D / f.den)) % D;
    step[static_cast<std::size_t>(i)] = s;
    std::int64_t s0 = ((-R % D) * s) % D;
    if (s0 < 0) s0 += D;
    start[static_cast<std::size_t>(i)] = s0;
  }

  std::vector<std::int64_t> digit(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> cur(start);
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  auto rebuild_prefix = [&](int from) {
    for (int i = from; i < n; ++i)
      prefix[static_cast<std::size_t>(i) + 1] =
          (prefix[static_cast<std::size_t>(i)] +
           cur[static_cast<std::size_t>(i)]) % D;
  };
  rebuild_prefix(0);

  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= side;

  for (std::int64_t flat = 0; flat < total; ++flat) {
    fn(flat, table[static_cast<std::size_t>(
                prefix[static_cast<std::size_t>(n)])]);
    int i = n - 1;
    for (; i >= 0; --i) {
      auto& d = digit[static_cast<std::size_t>(i)];
      if (++d < side) {
        auto& c = cur[static_cast<std::size_t>(i)];
        c += step[static_cast<std::size_t>(i)];
        if (c >= D) c -= D;
        break;
      }
      d = 0;
      cur[static_cast<std::size_t>(i)] = start[static_cast<std::size_t>(i)];
    }
    if (i < 0) break;  // walked the whole box
    rebuild_prefix(i);
  }
}

// Sum over the box of c(alpha) e(alpha . beta).  Phases come from
// alpha . beta reduced mod ord(beta) in integer arithmetic, so no
// accumulation error enters for large |alpha|.  Rank-1 boxes use the
// product of n one-dimensional sums.
std::complex<double> eval_expsum(const CoeffBox& c, const TorusPoint& beta);

struct LhsResult {
  double value = 0.0;
  std::optional<std::int64_t> exact_value;  // filled only by exact paths
  std::int64_t point_count = 0;
};

// Sum over beta in `set` of |eval_expsum(c, beta)|^2, accumulated in set
// order with compensated summation.
LhsResult sieve_lhs(const PointSet& set, const CoeffBox& c);

// Exact integer value of the prime-line sum with all-ones coefficients:
//   M^(2(n-1)) * sum over primes p <= X of r_p (p - r_p),
// with M = 2N+1 and r_p = M mod p.  Throws std::overflow_error when the
// value exceeds the 64-bit range.
std::int64_t exact_lhs_prime_line(int n, std::int64_t X, std::int64_t N);

}  // namespace sievelab
