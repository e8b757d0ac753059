#include "sievelab/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "sievelab/enumerate.hpp"

namespace sievelab {

namespace {

SpacingReport finalize(const PointSet& set, double Y,
                       std::vector<std::int64_t> counts,
                       bool keep_histogram) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > counts[best] ||
        (counts[i] == counts[best] &&
         canonical_point_less(set.points[i], set.points[best])))
      best = i;
  }
  SpacingReport rep;
  rep.n = set.n;
  rep.X = set.X;
  rep.Y = Y;
  rep.m_value = counts[best];
  rep.argmax_point = set.points[best];
  rep.bound_value = lemma2_bound(set.n, set.X, Y);
  rep.ratio = static_cast<double>(rep.m_value) / rep.bound_value;
  if (keep_histogram) rep.per_point_counts = std::move(counts);
  return rep;
}

void check_m_of_args(const PointSet& set, double Y) {
  if (set.points.empty())
    throw std::invalid_argument("m_of: empty point set");
  if (!(Y > 0)) throw std::invalid_argument("m_of: Y must be positive");
}

double int_pow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::int64_t neighbor_count(const PointSet& set, const TorusPoint& beta,
                            double Y) {
  if (!(Y > 0))
    throw std::invalid_argument("neighbor_count: Y must be positive");
  if (std::find(set.points.begin(), set.points.end(), beta) ==
      set.points.end())
    throw std::invalid_argument("neighbor_count: point is not in the set");
  std::int64_t count = 0;
  for (const TorusPoint& other : set.points)
    if (torus_distance(beta, other) < Y) ++count;
  return count;
}

SpacingReport m_of(const PointSet& set, double Y, bool keep_histogram) {
  check_m_of_args(set, Y);
  const std::size_t k = set.points.size();
  std::vector<std::int64_t> counts(k, 1);  // self always counted
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (torus_distance(set.points[i], set.points[j]) < Y) {
        ++counts[i];
        ++counts[j];
      }
  return finalize(set, Y, std::move(counts), keep_histogram);
}

SpacingReport m_of_bucketed(const PointSet& set, double Y,
                            bool keep_histogram) {
  check_m_of_args(set, Y);
  const int n = set.n;
  const std::size_t k = set.points.size();

  // Bucket side count: one less than floor(1/Y) so the cell width
  // strictly exceeds Y with margin ~Y^2, far above coordinate rounding;
  // close pairs then always sit in same or adjacent cells per axis.
  std::int64_t B = static_cast<std::int64_t>(std::floor(1.0 / Y)) - 1;
  if (B < 1) B = 1;
  // Keep the flattened cell space small.
  while (B > 1) {
    unsigned __int128 cells = 1;
    bool over = false;
    for (int i = 0; i < n && !over; ++i) {
      cells *= static_cast<unsigned __int128>(B);
      if (cells > (1u << 20)) over = true;
    }
    if (!over) break;
    B /= 2;
  }

  auto cell_of = [&](const Fraction& f) -> std::int64_t {
    auto c = static_cast<std::int64_t>(f.value() * static_cast<double>(B));
    return std::clamp<std::int64_t>(c, 0, B - 1);
  };
  auto flatten = [&](const std::vector<std::int64_t>& cell) -> std::int64_t {
    std::int64_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * B + cell[static_cast<std::size_t>(i)];
    return idx;
  };

  std::vector<std::vector<std::int64_t>> cell_coords(k);
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  for (std::size_t p = 0; p < k; ++p) {
    std::vector<std::int64_t> cell(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      cell[static_cast<std::size_t>(i)] = cell_of(set.points[p].coords[i]);
    buckets[flatten(cell)].push_back(p);
    cell_coords[p] = std::move(cell);
  }

  std::vector<std::int64_t> counts(k, 0);
  std::vector<std::int64_t> probe(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < k; ++p) {
    // Distinct per-axis candidate cells (dedup matters when B <= 3).
    std::vector<std::vector<std::int64_t>> axis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::int64_t c = cell_coords[p][static_cast<std::size_t>(i)];
      auto& a = axis[static_cast<std::size_t>(i)];
      for (std::int64_t d : {c - 1, c, c + 1}) {
        std::int64_t w = ((d % B) + B) % B;
        if (std::find(a.begin(), a.end(), w) == a.end()) a.push_back(w);
      }
    }
    auto rec = [&](auto&& self, int level) -> void {
      if (level == n) {
        auto it = buckets.find(flatten(probe));
        if (it == buckets.end()) return;
        for (std::size_t q : it->second)
          if (torus_distance(set.points[p], set.points[q]) < Y) ++counts[p];
        return;
      }
      for (std::int64_t c : axis[static_cast<std::size_t>(level)]) {
        probe[static_cast<std::size_t>(level)] = c;
        self(self, level + 1);
      }
    };
    rec(rec, 0);
  }
  return finalize(set, Y, std::move(counts), keep_histogram);
}

double lemma2_bound(int n, std::int64_t X, double Y) {
  if (n < 1) throw std::invalid_argument("lemma2_bound: n must be >= 1");
  if (X < 1) throw std::invalid_argument("lemma2_bound: X must be >= 1");
  if (!(Y > 0)) throw std::invalid_argument("lemma2_bound: Y must be positive");
  double Xd = static_cast<double>(X);
  return int_pow(Xd, n + 1) * int_pow(Y, n) + Xd * Xd * Y + 1.0;
}

std::int64_t farey_line_max_count(int n, std::int64_t X, double Y) {
  PointSet line = enumerate_farey_line_Tprime(n, X);
  return m_of(line, Y).m_value;
}

double min_spacing(const PointSet& set) {
  const std::size_t k = set.points.size();
  if (k < 2)
    throw std::invalid_argument("min_spacing: need at least two points");
  double best = 0.5;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      best = std::min(best, torus_distance(set.points[i], set.points[j]));
  return best;
}

}  // namespace sievelab
