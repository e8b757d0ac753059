#include "sievelab/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace sievelab {

std::string TorusPoint::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += coords[i].str();
  }
  return s;
}

TorusPoint make_point(std::vector<Fraction> coords) {
  if (coords.empty()) throw std::invalid_argument("make_point: empty point");
  std::int64_t ord = 1;
  for (const Fraction& c : coords) ord = checked_lcm(ord, c.den);
  return TorusPoint{std::move(coords), ord};
}

std::int64_t order_of(const TorusPoint& p) { return p.order; }

TorusPoint parse_point(const std::string& text) {
  std::vector<Fraction> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t slash = piece.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("parse_point: expected a/q, got '" + piece +
                                  "'");
    std::int64_t a, q;
    try {
      a = std::stoll(piece.substr(0, slash));
      q = std::stoll(piece.substr(slash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_point: bad integer in '" + piece +
                                  "'");
    }
    coords.push_back(make_fraction(a, q));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return make_point(std::move(coords));
}

Fraction coord_torus_dist(const Fraction& x, const Fraction& y) {
  return dist_to_int(sub_mod1(x, y));
}

double torus_distance(const TorusPoint& x, const TorusPoint& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("torus_distance: dimension mismatch");
  Fraction best{0, 1};
  for (int i = 0; i < x.dim(); ++i) {
    Fraction d = coord_torus_dist(x.coords[i], y.coords[i]);
    if (frac_less(best, d)) best = d;
  }
  return best.value();
}

bool canonical_point_less(const TorusPoint& a, const TorusPoint& b) {
  const int n = std::min(a.dim(), b.dim());
  for (int i = 0; i < n; ++i) {
    const Fraction& fa = a.coords[i];
    const Fraction& fb = b.coords[i];
    if (fa.den != fb.den) return fa.den < fb.den;
    if (fa.num != fb.num) return fa.num < fb.num;
  }
  return a.dim() < b.dim();
}

const char* set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::order_ball: return "order_ball";
    case SetKind::S: return "S";
    case SetKind::prime_line_T: return "prime_line_T";
    case SetKind::farey_line_Tprime: return "farey_line_Tprime";
    case SetKind::custom: return "custom";
  }
  return "?";
}

SetKind parse_set_kind(const std::string& name) {
  if (name == "order_ball") return SetKind::order_ball;
  if (name == "S") return SetKind::S;
  if (name == "prime_line_T" || name == "prime_line")
    return SetKind::prime_line_T;
  if (name == "farey_line_Tprime" || name == "farey_line")
    return SetKind::farey_line_Tprime;
  if (name == "custom") return SetKind::custom;
  throw std::invalid_argument("unknown set kind: " + name);
}

namespace {

bool is_prime_i64(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool line_tail_is_zero(const TorusPoint& p) {
  for (int i = 1; i < p.dim(); ++i)
    if (!p.coords[i].is_zero()) return false;
  return true;
}

}  // namespace

bool member_predicate(const PointSet& set, const TorusPoint& p) {
  if (p.dim() != set.n) return false;
  switch (set.kind) {
    case SetKind::order_ball:
      return p.order <= set.X;
    case SetKind::S:
      // ord <= X, first coordinate a nonzero reduced fraction a1/q1 with
      // ceil(X/2) <= q1 <= X.  The a1 >= 1 requirement makes S empty for
      // X = 1 and keeps 0 out of the first coordinate for every X.
      return p.order <= set.X && p.coords[0].num >= 1 &&
             2 * p.coords[0].den >= set.X && p.coords[0].den <= set.X;
    case SetKind::prime_line_T:
      return p.order <= set.X && line_tail_is_zero(p) &&
             p.coords[0].num >= 1 && is_prime_i64(p.coords[0].den);
    case SetKind::farey_line_Tprime:
      return p.order <= set.X && line_tail_is_zero(p) &&
             p.coords[0].den <= set.X;
    case SetKind::custom:
      return true;
  }
  return false;
}

}  // namespace sievelab
