#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sievelab/coeff_box.hpp"
#include "sievelab/enumerate.hpp"
#include "sievelab/torus.hpp"

namespace sievelab {

// Majorant envelopes.  X^epsilon factors and implied constants are
// dropped throughout; ratio experiments report fitted constants instead.
double majorant_gallagher(int n, std::int64_t N, std::int64_t X);  // N^n + X^(2n)
double majorant_goal(int n, std::int64_t N, std::int64_t X);       // N^n + X^(n+1)
double majorant_improved(int n, std::int64_t N, std::int64_t X);   // X^(n+1) + N^(n-1) X^2 + N^n
double majorant_mv_classical(double delta, std::int64_t N);        // 1/delta + N
double majorant_thm2_product(std::span<const double> N_list,
                             std::span<const double> delta_list);

struct ExperimentReport {
  std::string experiment = "ratio";
  int n = 1;
  std::int64_t X = 1;
  std::int64_t N = 0;
  std::string set_kind;
  std::string coeff_kind;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  std::optional<std::int64_t> exact_lhs;
  double l2 = 0.0;
  double ratio = 0.0;  // lhs / l2
  std::map<std::string, double> majorants;
  std::optional<double> fitted_constant;  // ratio / majorant_improved
  std::optional<double> slope;
};

// Enumerates the set, builds coefficients, and fills lhs / l2 / ratio and
// every applicable majorant.  prime_line_T with ones coefficients also
// fills exact_lhs and cross-checks the float path against it.
ExperimentReport run_ratio_experiment(int n, std::int64_t X, std::int64_t N,
                                      SetKind set_kind, CoeffKind coeff_kind,
                                      std::uint64_t seed,
                                      const EnumLimits& limits = {});

// Same computation on a prebuilt set and box (file coefficients, custom
// sets).  `coeff_label` names the coefficient source in the report.
ExperimentReport run_ratio_experiment(const PointSet& set, const CoeffBox& c,
                                      const std::string& coeff_label,
                                      std::uint64_t seed);

struct ClassicalCheckReport {
  std::int64_t point_count = 0;
  std::int64_t N = 0;
  double delta = 0.5;
  double lhs = 0.0;
  double coeff_l2 = 0.0;
  double majorant = 0.0;     // (1/delta + N) * coeff_l2
  double slack_ratio = 0.0;  // lhs / majorant
  std::uint64_t seed = 0;
};

// One-dimensional bound check: points are reals mod 1, coefficients are
// the window a_1..a_N.  delta is the minimum pairwise mod-1 distance
// (convention 1/2 for a single point; duplicates are rejected).  Throws
// invariant_violation_error if lhs exceeds (1/delta + N) sum|a|^2 beyond
// 1e-10 relative slack, since that would contradict a proved bound.
ClassicalCheckReport run_classical_check(
    std::span<const double> points, std::int64_t N,
    std::span<const std::complex<double>> coeffs, std::uint64_t seed = 0);

struct KernelIdentityReport {
  int n = 1;
  std::int64_t N = 1;
  std::int64_t K_ext = 0;
  std::int64_t set_size = 0;
  double b_l2 = 0.0;
  double pair_sum = 0.0;
  double alpha_sum = 0.0;
  double box_sum = 0.0;
  double tail_budget_value = 0.0;
  bool within_budget = false;
  bool positivity_ok = false;
};

// Two routes to the same quantity:
//   pair route:  (pi^2 N / 2)^n sum over pairs with every coordinate
//                distance below 1/(2N) of b(r) conj(b(s)) prod(1 - 2N d_i),
//                closeness decided exactly on rationals;
//   alpha route: sum over max|alpha_i| <= K_ext of
//                prod_i phi(alpha_i/(2N)) |sum_r b(r) e(alpha . beta_r)|^2.
// Asserts |pair - alpha| <= tail_budget(n, N, K_ext, sum|b|^2) and the
// positivity step (unweighted box sum <= weighted extended sum); a
// violation throws invariant_violation_error.
KernelIdentityReport kernel_identity_check(const PointSet& set,
                                           const Eigen::VectorXcd& b,
                                           std::int64_t N, std::int64_t K_ext);

// Truncation allowance for the alpha route, 3n (2N)^2/K (pi^2 N/2)^(n-1) B.
double tail_budget(int n, std::int64_t N, std::int64_t K, double b_l2);

// Halving ranges [floor(hi/2)+1, hi] from X down to [1,1]; they partition
// [1, X].
std::vector<std::pair<std::int64_t, std::int64_t>> dyadic_decompose(
    std::int64_t X);

// Least-squares slope of log(ys) against log(xs).  Needs at least two
// distinct xs; all values must be positive.
double slope_fit(std::span<const double> xs, std::span<const double> ys);

struct SweepReport {
  std::string quantity;
  int n = 1;
  std::int64_t N = 0;
  double Y = 0.0;
  std::string set_kind;
  std::string coeff_kind;
  std::uint64_t seed = 0;
  std::vector<double> xs;
  std::vector<double> ys;
  double slope = 0.0;
};

}  // namespace sievelab
