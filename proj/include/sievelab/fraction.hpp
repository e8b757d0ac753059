#pragma once

#include <cstdint>
#include <string>

namespace sievelab {

// Reduced rational residue a/q on R/Z.  Invariants: 0 <= num < den,
// gcd(num, den) = 1; the zero residue is canonically 0/1.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  bool is_zero() const { return num == 0; }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Canonical representative of a/q mod 1 in [0, 1).  q may be negative;
// q == 0 throws std::invalid_argument.
Fraction make_fraction(std::int64_t a, std::int64_t q);

// Exact (x - y) mod 1.
Fraction sub_mod1(const Fraction& x, const Fraction& y);

// Exact distance of f to the nearest integer: min(f, 1 - f), in [0, 1/2].
Fraction dist_to_int(const Fraction& f);

// Exact value comparison x < y.
bool frac_less(const Fraction& x, const Fraction& y);

// lcm with overflow detection (throws std::overflow_error).
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace sievelab
