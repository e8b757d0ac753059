#include "sievelab/fraction.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace sievelab {

std::string Fraction::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction make_fraction(std::int64_t a, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("make_fraction: zero denominator");
  if (q < 0) {
    a = -a;
    q = -q;
  }
  // a mod q into [0, q)
  a %= q;
  if (a < 0) a += q;
  std::int64_t g = std::gcd(a, q);
  return Fraction{a / g, q / g};
}

Fraction sub_mod1(const Fraction& x, const Fraction& y) {
  // Denominators stay <= lcm of inputs; intermediates fit __int128 easily
  // at desk scale, so reduce there and convert back.
  __int128 num = static_cast<__int128>(x.num) * y.den -
                 static_cast<__int128>(y.num) * x.den;
  __int128 den = static_cast<__int128>(x.den) * y.den;
  num %= den;
  if (num < 0) num += den;
  // gcd on __int128 by Euclid
  __int128 u = num, v = den;
  while (v != 0) {
    __int128 t = u % v;
    u = v;
    v = t;
  }
  if (u == 0) u = 1;
  num /= u;
  den /= u;
  if (den > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("sub_mod1: denominator overflow");
  return Fraction{static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den)};
}

Fraction dist_to_int(const Fraction& f) {
  // f in [0, 1): distance is min(f, 1 - f).
  if (2 * f.num <= f.den) return f;
  return Fraction{f.den - f.num, f.den};
}

bool frac_less(const Fraction& x, const Fraction& y) {
  return static_cast<__int128>(x.num) * y.den <
         static_cast<__int128>(y.num) * x.den;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("checked_lcm: overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace sievelab
