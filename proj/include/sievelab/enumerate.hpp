#pragma once

#include <cstdint>
#include <vector>

#include "sievelab/torus.hpp"

namespace sievelab {

struct EnumLimits {
  // Enumeration refuses before materializing anything when the predicted
  // point count exceeds this; family sizes scale like X^(n+1).
  std::int64_t max_points = 10'000'000;
};

// Sorted primes <= X (sieve of Eratosthenes); size pi(X).
std::vector<std::int64_t> primes_upto(std::int64_t X);

// phi(1..X) by a totient sieve.
std::vector<std::int64_t> totients_upto(std::int64_t X);

// Exact size the enumerations below will produce, computed without
// materializing points (denominator loops only).
std::int64_t predicted_count(SetKind kind, int n, std::int64_t X);

// All beta with ord(beta) <= X, canonical (q1, a1, q2, a2, ...) order.
PointSet enumerate_order_ball(int n, std::int64_t X, const EnumLimits& limits = {});

// ord(beta) <= X with first coordinate a1/q1, 1 <= a1 < q1,
// ceil(X/2) <= q1 <= X (closed band; empty for X = 1).
PointSet enumerate_S(int n, std::int64_t X, const EnumLimits& limits = {});

// (a/p, 0, ..., 0) over primes p <= X, 1 <= a < p.
PointSet enumerate_prime_line_T(int n, std::int64_t X, const EnumLimits& limits = {});

// (a/q, 0, ..., 0) over q <= X: Farey fractions of level X on the first
// coordinate, zero elsewhere.  Includes the zero point.
PointSet enumerate_farey_line_Tprime(int n, std::int64_t X, const EnumLimits& limits = {});

// Convenience dispatch on kind (custom is not enumerable).
PointSet enumerate_set(SetKind kind, int n, std::int64_t X, const EnumLimits& limits = {});

}  // namespace sievelab
