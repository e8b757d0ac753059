#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sievelab/torus.hpp"

namespace sievelab {

// Outcome of a neighbor-count maximization over a point set.
struct SpacingReport {
  int n = 1;
  std::int64_t X = 1;
  double Y = 0.0;
  std::int64_t m_value = 0;      // max neighbor count, self included
  TorusPoint argmax_point;       // canonically least among ties
  double bound_value = 0.0;      // X^(n+1) Y^n + X^2 Y + 1
  double ratio = 0.0;            // m_value / bound_value
  std::optional<std::vector<std::int64_t>> per_point_counts;
};

// Number of beta' in `set` with torus_distance(beta, beta') < Y (strict).
// beta itself is always counted.  Throws std::invalid_argument when beta
// is not a member of the set or Y <= 0.
std::int64_t neighbor_count(const PointSet& set, const TorusPoint& beta,
                            double Y);

// Maximum neighbor count over the set, brute force over all pairs.
// Ties go to the canonically least point.  Throws on an empty set.
SpacingReport m_of(const PointSet& set, double Y,
                   bool keep_histogram = false);

// Same counts via a uniform-bucket grid; exists to cross-check m_of and
// to speed up large sets.  Must agree with m_of exactly.
SpacingReport m_of_bucketed(const PointSet& set, double Y,
                            bool keep_histogram = false);

// X^(n+1) Y^n + X^2 Y + 1.
double lemma2_bound(int n, std::int64_t X, double Y);

// m_of over the Farey line of level X embedded in n dimensions; witnesses
// that the X^2 Y term of lemma2_bound is attained up to constants.
std::int64_t farey_line_max_count(int n, std::int64_t X, double Y);

// Minimum pairwise torus distance.  Throws when |set| < 2.
double min_spacing(const PointSet& set);

}  // namespace sievelab
