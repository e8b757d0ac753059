#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sievelab/fraction.hpp"

namespace sievelab {

// Rational point on the n-torus R^n/Z^n.  `order` caches the additive
// order, the lcm of the reduced coordinate denominators (1 for the zero
// point).
struct TorusPoint {
  std::vector<Fraction> coords;
  std::int64_t order = 1;

  int dim() const { return static_cast<int>(coords.size()); }
  std::string str() const;  // "a1/q1,...,an/qn"

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.coords == b.coords;
  }
};

// Builds a point and caches its order.  Throws on empty coordinate list.
TorusPoint make_point(std::vector<Fraction> coords);

// Inverse of TorusPoint::str(): parses "a1/q1,...,an/qn".
// Throws std::invalid_argument on malformed input.
TorusPoint parse_point(const std::string& text);

std::int64_t order_of(const TorusPoint& p);

// max_i || x_i - y_i || with || . || the distance to the nearest integer.
// Computed exactly on rationals, converted to double at the end.
// Throws std::invalid_argument on dimension mismatch.
double torus_distance(const TorusPoint& x, const TorusPoint& y);

// Exact per-coordinate distance || x - y || as a fraction in [0, 1/2].
Fraction coord_torus_dist(const Fraction& x, const Fraction& y);

// Canonical enumeration order: lexicographic by (q1, a1, q2, a2, ...).
bool canonical_point_less(const TorusPoint& a, const TorusPoint& b);

enum class SetKind { order_ball, S, prime_line_T, farey_line_Tprime, custom };

const char* set_kind_name(SetKind kind);
SetKind parse_set_kind(const std::string& name);  // throws std::invalid_argument

// Finite family of torus points plus the construction metadata needed to
// re-check membership.
struct PointSet {
  int n = 1;
  SetKind kind = SetKind::custom;
  std::int64_t X = 1;
  std::vector<TorusPoint> points;

  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
};

// Re-evaluates the defining predicate of `set.kind` on a single point.
// `custom` accepts any point of the right dimension.
bool member_predicate(const PointSet& set, const TorusPoint& p);

}  // namespace sievelab
