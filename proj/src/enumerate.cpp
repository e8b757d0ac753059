#include "sievelab/enumerate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "sievelab/errors.hpp"

namespace sievelab {

std::vector<std::int64_t> primes_upto(std::int64_t X) {
  if (X < 0) throw std::invalid_argument("primes_upto: negative bound");
  std::vector<std::int64_t> primes;
  if (X < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(X) + 1, false);
  for (std::int64_t p = 2; p <= X; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= X; m += p)
      composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

std::vector<std::int64_t> totients_upto(std::int64_t X) {
  if (X < 1) throw std::invalid_argument("totients_upto: bound must be >= 1");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(X) + 1);
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::int64_t p = 2; p <= X; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;  // p not prime
    for (std::int64_t m = p; m <= X; m += p)
      phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
  }
  return phi;
}

namespace {

void check_params(int n, std::int64_t X) {
  if (n < 1) throw std::invalid_argument("enumerate: dimension must be >= 1");
  if (X < 1) throw std::invalid_argument("enumerate: X must be >= 1");
}

struct DenomBand {
  std::int64_t lo, hi;
};

// q1 range per kind.  For S the band is the closed interval
// [ceil(X/2), X]; the a1 >= 1 restriction is handled at numerator level.
DenomBand first_denominator_band(SetKind kind, std::int64_t X) {
  if (kind == SetKind::S) return {(X + 1) / 2, X};
  return {1, X};
}

// Counts points of the order_ball / S families without materializing them:
// depth-first over denominator tuples with running-lcm pruning, summing
// products of per-coordinate numerator counts.
std::int64_t count_product_family(SetKind kind, int n, std::int64_t X,
                                  const std::vector<std::int64_t>& phi) {
  DenomBand band = first_denominator_band(kind, X);
  auto coord_choices = [&](int level, std::int64_t qv) -> std::int64_t {
    if (level == 0 && kind == SetKind::S && qv == 1) return 0;
    return phi[static_cast<std::size_t>(qv)];  // phi(1) = 1 covers a = 0
  };
  std::int64_t total = 0;
  auto rec = [&](auto&& self, int level, std::int64_t lcm_so_far,
                 std::int64_t choices_so_far) -> void {
    std::int64_t lo = (level == 0) ? band.lo : 1;
    std::int64_t hi = (level == 0) ? band.hi : X;
    for (std::int64_t qv = lo; qv <= hi; ++qv) {
      std::int64_t l = std::lcm(lcm_so_far, qv);
      if (l > X) continue;
      std::int64_t c = coord_choices(level, qv);
      if (c == 0) continue;
      if (level + 1 == n) {
        total += choices_so_far * c;
      } else {
        self(self, level + 1, l, choices_so_far * c);
      }
    }
  };
  rec(rec, 0, 1, 1);
  return total;
}

// Numerators for denominator q in increasing order: 0 for q = 1, otherwise
// 1 <= a < q coprime to q.
std::vector<std::int64_t> coprime_numerators(std::int64_t q) {
  std::vector<std::int64_t> out;
  if (q == 1) {
    out.push_back(0);
    return out;
  }
  for (std::int64_t a = 1; a < q; ++a)
    if (std::gcd(a, q) == 1) out.push_back(a);
  return out;
}

PointSet enumerate_product_family(SetKind kind, int n, std::int64_t X,
                                  const EnumLimits& limits) {
  check_params(n, X);
  std::vector<std::int64_t> phi = totients_upto(X);

  std::int64_t predicted = count_product_family(kind, n, X, phi);
  if (predicted > limits.max_points)
    throw resource_cap_error(
        "enumeration would exceed the point cap (" +
        std::to_string(limits.max_points) + " points): kind=" +
        set_kind_name(kind) + " n=" + std::to_string(n) +
        " X=" + std::to_string(X) + " predicted=" + std::to_string(predicted));

  PointSet set;
  set.n = n;
  set.kind = kind;
  set.X = X;
  set.points.reserve(static_cast<std::size_t>(predicted));

  std::vector<std::vector<std::int64_t>> nums(static_cast<std::size_t>(X) + 1);
  auto numerators = [&](std::int64_t q) -> const std::vector<std::int64_t>& {
    auto& v = nums[static_cast<std::size_t>(q)];
    if (v.empty()) v = coprime_numerators(q);
    return v;
  };

  DenomBand band = first_denominator_band(kind, X);
  std::vector<Fraction> coords(static_cast<std::size_t>(n));

  // Interleaved (q, a) recursion produces the canonical lexicographic
  // (q1, a1, q2, a2, ...) order directly.
  auto rec = [&](auto&& self, int level, std::int64_t lcm_so_far) -> void {
    std::int64_t lo = (level == 0) ? band.lo : 1;
    std::int64_t hi = (level == 0) ? band.hi : X;
    for (std::int64_t qv = lo; qv <= hi; ++qv) {
      std::int64_t l = std::lcm(lcm_so_far, qv);
      if (l > X) continue;
      if (level == 0 && kind == SetKind::S && qv == 1) continue;
      for (std::int64_t a : numerators(qv)) {
        coords[static_cast<std::size_t>(level)] = Fraction{a, qv};
        if (level + 1 == n) {
          set.points.push_back(make_point(coords));
        } else {
          self(self, level + 1, l);
        }
      }
    }
  };
  rec(rec, 0, 1);
  return set;
}

PointSet enumerate_line_family(SetKind kind, int n, std::int64_t X,
                               const EnumLimits& limits) {
  check_params(n, X);
  std::int64_t predicted = predicted_count(kind, n, X);
  if (predicted > limits.max_points)
    throw resource_cap_error("enumeration would exceed the point cap (" +
                             std::to_string(limits.max_points) + " points)");

  PointSet set;
  set.n = n;
  set.kind = kind;
  set.X = X;
  set.points.reserve(static_cast<std::size_t>(predicted));

  std::vector<Fraction> coords(static_cast<std::size_t>(n), Fraction{0, 1});
  auto push_first = [&](std::int64_t a, std::int64_t q) {
    coords[0] = Fraction{a, q};
    set.points.push_back(make_point(coords));
  };

  if (kind == SetKind::farey_line_Tprime) {
    push_first(0, 1);
    for (std::int64_t q = 2; q <= X; ++q)
      for (std::int64_t a = 1; a < q; ++a)
        if (std::gcd(a, q) == 1) push_first(a, q);
  } else {  // prime_line_T
    for (std::int64_t p : primes_upto(X))
      for (std::int64_t a = 1; a < p; ++a) push_first(a, p);
  }
  return set;
}

}  // namespace

std::int64_t predicted_count(SetKind kind, int n, std::int64_t X) {
  check_params(n, X);
  switch (kind) {
    case SetKind::prime_line_T: {
      std::int64_t total = 0;
      for (std::int64_t p : primes_upto(X)) total += p - 1;
      return total;
    }
    case SetKind::farey_line_Tprime: {
      std::vector<std::int64_t> phi = totients_upto(X);
      std::int64_t total = 1;
      for (std::int64_t q = 2; q <= X; ++q)
        total += phi[static_cast<std::size_t>(q)];
      return total;
    }
    case SetKind::order_ball:
    case SetKind::S:
      return count_product_family(kind, n, X, totients_upto(X));
    case SetKind::custom:
      throw std::invalid_argument("predicted_count: custom sets are not enumerable");
  }
  return 0;
}

PointSet enumerate_order_ball(int n, std::int64_t X, const EnumLimits& limits) {
  return enumerate_product_family(SetKind::order_ball, n, X, limits);
}

PointSet enumerate_S(int n, std::int64_t X, const EnumLimits& limits) {
  return enumerate_product_family(SetKind::S, n, X, limits);
}

PointSet enumerate_prime_line_T(int n, std::int64_t X, const EnumLimits& limits) {
  return enumerate_line_family(SetKind::prime_line_T, n, X, limits);
}

PointSet enumerate_farey_line_Tprime(int n, std::int64_t X,
                                     const EnumLimits& limits) {
  return enumerate_line_family(SetKind::farey_line_Tprime, n, X, limits);
}

PointSet enumerate_set(SetKind kind, int n, std::int64_t X,
                       const EnumLimits& limits) {
  switch (kind) {
    case SetKind::order_ball: return enumerate_order_ball(n, X, limits);
    case SetKind::S: return enumerate_S(n, X, limits);
    case SetKind::prime_line_T: return enumerate_prime_line_T(n, X, limits);
    case SetKind::farey_line_Tprime:
      return enumerate_farey_line_Tprime(n, X, limits);
    case SetKind::custom:
      throw std::invalid_argument("enumerate_set: custom sets are not enumerable");
  }
  throw std::invalid_argument("enumerate_set: bad kind");
}

}  // namespace sievelab
