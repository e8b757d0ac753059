#include "sievelab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sievelab/compensated.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/expsum.hpp"
#include "sievelab/kernels.hpp"
#include "sievelab/spacing.hpp"

namespace sievelab {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_i(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_majorant_params(const char* who, int n, std::int64_t N,
                           std::int64_t X) {
  if (n < 1 || N < 1 || X < 1)
    throw std::invalid_argument(std::string(who) +
                                ": n, N, X must all be >= 1");
}

}  // namespace

double majorant_gallagher(int n, std::int64_t N, std::int64_t X) {
  check_majorant_params("majorant_gallagher", n, N, X);
  return pow_i(static_cast<double>(N), n) +
         pow_i(static_cast<double>(X), 2 * n);
}

double majorant_goal(int n, std::int64_t N, std::int64_t X) {
  check_majorant_params("majorant_goal", n, N, X);
  return pow_i(static_cast<double>(N), n) +
         pow_i(static_cast<double>(X), n + 1);
}

double majorant_improved(int n, std::int64_t N, std::int64_t X) {
  check_majorant_params("majorant_improved", n, N, X);
  double Nd = static_cast<double>(N);
  double Xd = static_cast<double>(X);
  return pow_i(Xd, n + 1) + pow_i(Nd, n - 1) * Xd * Xd + pow_i(Nd, n);
}

double majorant_mv_classical(double delta, std::int64_t N) {
  if (!(delta > 0.0) || delta > 0.5)
    throw std::invalid_argument(
        "majorant_mv_classical: delta must lie in (0, 1/2]");
  if (N < 1) throw std::invalid_argument("majorant_mv_classical: N must be >= 1");
  return 1.0 / delta + static_cast<double>(N);
}

double majorant_thm2_product(std::span<const double> N_list,
                             std::span<const double> delta_list) {
  if (N_list.size() != delta_list.size() || N_list.empty())
    throw std::invalid_argument(
        "majorant_thm2_product: N and delta lists must match and be nonempty");
  double prod = 1.0;
  for (std::size_t j = 0; j < N_list.size(); ++j) {
    double Nj = N_list[j];
    double dj = delta_list[j];
    if (!(Nj > 0))
      throw std::invalid_argument("majorant_thm2_product: N_j must be positive");
    if (!(dj > 0.0) || dj > 0.5)
      throw std::invalid_argument(
          "majorant_thm2_product: delta_j must lie in (0, 1/2]");
    double s = std::sqrt(Nj) + std::sqrt(1.0 / dj);
    prod *= s * s;
  }
  return prod;
}

namespace {

ExperimentReport ratio_core(const PointSet& set, const CoeffBox& c,
                            const std::string& coeff_label,
                            std::uint64_t seed) {
  if (set.n != c.n)
    throw std::invalid_argument("run_ratio_experiment: dimension mismatch");
  if (c.N < 1)
    throw std::invalid_argument(
        "run_ratio_experiment: box radius must be >= 1");

  ExperimentReport rep;
  rep.experiment = "ratio";
  rep.n = set.n;
  rep.X = set.X;
  rep.N = c.N;
  rep.set_kind = set_kind_name(set.kind);
  rep.coeff_kind = coeff_label;
  rep.seed = seed;

  rep.lhs = sieve_lhs(set, c).value;
  rep.l2 = l2_norm_sq(c);
  rep.ratio = rep.l2 > 0.0 ? rep.lhs / rep.l2 : 0.0;

  rep.majorants["gallagher"] = majorant_gallagher(set.n, c.N, set.X);
  rep.majorants["goal"] = majorant_goal(set.n, c.N, set.X);
  double improved = majorant_improved(set.n, c.N, set.X);
  rep.majorants["improved"] = improved;

  // Spacing-based majorants: delta is the observed minimum spacing,
  // nudged down so "distance > delta" holds for every pair; 1/2 covers
  // sets with fewer than two points.
  double delta = set.size() >= 2 ? min_spacing(set) : 0.5;
  if (delta > 0.0) {
    double dl = std::min(delta * (1.0 - 1e-9), 0.5);
    if (set.n == 1)
      rep.majorants["mv_classical"] = majorant_mv_classical(dl, 2 * c.N + 1);
    std::vector<double> Ns(static_cast<std::size_t>(set.n),
                           static_cast<double>(2 * c.N + 1));
    std::vector<double> ds(static_cast<std::size_t>(set.n), dl);
    rep.majorants["thm2_product"] = majorant_thm2_product(Ns, ds);
  }

  rep.fitted_constant = rep.ratio / improved;
  return rep;
}

}  // namespace

ExperimentReport run_ratio_experiment(int n, std::int64_t X, std::int64_t N,
                                      SetKind set_kind, CoeffKind coeff_kind,
                                      std::uint64_t seed,
                                      const EnumLimits& limits) {
  PointSet set = enumerate_set(set_kind, n, X, limits);
  CoeffBox box = make_coeffs(n, N, coeff_kind, seed);
  ExperimentReport rep = ratio_core(set, box, coeff_kind_name(coeff_kind), seed);

  if (set_kind == SetKind::prime_line_T && coeff_kind == CoeffKind::ones) {
    std::int64_t exact = exact_lhs_prime_line(n, X, N);
    rep.exact_lhs = exact;
    double ref = std::max(1.0, static_cast<double>(exact));
    if (std::abs(rep.lhs - static_cast<double>(exact)) > 1e-6 * ref)
      throw invariant_violation_error(
          "run_ratio_experiment: float LHS " + std::to_string(rep.lhs) +
          " deviates from exact " + std::to_string(exact));
  }
  return rep;
}

ExperimentReport run_ratio_experiment(const PointSet& set, const CoeffBox& c,
                                      const std::string& coeff_label,
                                      std::uint64_t seed) {
  return ratio_core(set, c, coeff_label, seed);
}

ClassicalCheckReport run_classical_check(
    std::span<const double> points, std::int64_t N,
    std::span<const std::complex<double>> coeffs, std::uint64_t seed) {
  if (points.empty())
    throw std::invalid_argument("run_classical_check: no sample points");
  if (N < 1) throw std::invalid_argument("run_classical_check: N must be >= 1");
  if (static_cast<std::int64_t>(coeffs.size()) != N)
    throw std::invalid_argument(
        "run_classical_check: coefficient window must have exactly N entries");

  std::vector<double> xs;
  xs.reserve(points.size());
  for (double p : points) xs.push_back(p - std::floor(p));

  double delta = 0.5;
  if (xs.size() >= 2) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        double d = std::abs(xs[i] - xs[j]);
        delta = std::min(delta, std::min(d, 1.0 - d));
      }
    if (delta <= 0.0)
      throw std::invalid_argument("run_classical_check: duplicate points");
  }

  CompensatedSum lhs_acc;
  for (double x : xs) {
    CompensatedComplexSum inner;
    for (std::int64_t k = 1; k <= N; ++k)
      inner.add(coeffs[static_cast<std::size_t>(k - 1)] *
                unit_phase(static_cast<double>(k) * x));
    lhs_acc.add(std::norm(inner.value()));
  }

  CompensatedSum l2_acc;
  for (const auto& a : coeffs) l2_acc.add(std::norm(a));

  ClassicalCheckReport rep;
  rep.point_count = static_cast<std::int64_t>(xs.size());
  rep.N = N;
  rep.delta = delta;
  rep.lhs = lhs_acc.value();
  rep.coeff_l2 = l2_acc.value();
  rep.majorant = (1.0 / delta + static_cast<double>(N)) * rep.coeff_l2;
  rep.slack_ratio = rep.majorant > 0.0 ? rep.lhs / rep.majorant : 0.0;
  rep.seed = seed;

  if (rep.lhs > rep.majorant * (1.0 + 1e-10))
    throw invariant_violation_error(
        "run_classical_check: LHS " + std::to_string(rep.lhs) +
        " exceeds the (1/delta + N) bound " + std::to_string(rep.majorant));
  return rep;
}

double tail_budget(int n, std::int64_t N, std::int64_t K, double b_l2) {
  // Dropping the alpha outside max|alpha_i| <= K loses at most n slabs
  // (one per coordinate).  Within a slab the truncated coordinate carries
  // the kernel tail sum_{|m|>K} phi(m/(2N)) <= 2 N^2/K (from
  // phi(x) <= 1/(4x^2)), each remaining coordinate at most the full
  // kernel mass sum_m phi(m/(2N)) = pi^2 N / 2, and |S_b(alpha)|^2
  // averages to sum|b|^2 over a slab when the phases equidistribute.
  // The leading constant 3 (2N)^2/K = 12 N^2/K leaves a 6x allowance for
  // non-equidistribution at desk scale; this is a tested budget, not a
  // proved bound.
  if (n < 1 || N < 1 || K < 1)
    throw std::invalid_argument("tail_budget: n, N, K must be >= 1");
  double Nd = static_cast<double>(N);
  return 3.0 * n * (2.0 * Nd) * (2.0 * Nd) / static_cast<double>(K) *
         pow_i(kPi * kPi * Nd / 2.0, n - 1) * b_l2;
}

KernelIdentityReport kernel_identity_check(const PointSet& set,
                                           const Eigen::VectorXcd& b,
                                           std::int64_t N,
                                           std::int64_t K_ext) {
  if (set.size() > 200)
    throw resource_cap_error(
        "kernel_identity_check: set size " + std::to_string(set.size()) +
        " exceeds the 200-point cap");
  if (b.size() != set.size())
    throw std::invalid_argument(
        "kernel_identity_check: coefficient vector does not match set size");
  if (N < 1)
    throw std::invalid_argument("kernel_identity_check: N must be >= 1");
  if (K_ext < 10 * N)
    throw std::invalid_argument("kernel_identity_check: K_ext must be >= 10N");

  const int n = set.n;
  const std::int64_t side = 2 * K_ext + 1;
  unsigned __int128 total_wide = 1;
  for (int i = 0; i < n; ++i) {
    total_wide *= static_cast<unsigned __int128>(side);
    if (total_wide > 50'000'000u)
      throw resource_cap_error(
          "kernel_identity_check: alpha grid (2K+1)^n exceeds 5e7 cells");
  }
  const auto total = static_cast<std::int64_t>(total_wide);

  KernelIdentityReport rep;
  rep.n = n;
  rep.N = N;
  rep.K_ext = K_ext;
  rep.set_size = set.size();
  rep.b_l2 = b.squaredNorm();

  // Pair route.  Closeness of a pair is decided exactly on rationals:
  // d < 1/(2N) iff 2N num < den for the reduced coordinate distance.
  CompensatedComplexSum pair_acc;
  const std::int64_t count = set.size();
  for (std::int64_t r = 0; r < count; ++r) {
    for (std::int64_t s = 0; s < count; ++s) {
      double prod = 1.0;
      bool close = true;
      for (int i = 0; i < n && close; ++i) {
        Fraction d = coord_torus_dist(
            set.points[static_cast<std::size_t>(r)].coords[static_cast<std::size_t>(i)],
            set.points[static_cast<std::size_t>(s)].coords[static_cast<std::size_t>(i)]);
        if (static_cast<__int128>(2) * N * d.num <
            static_cast<__int128>(d.den)) {
          prod *= 1.0 - 2.0 * static_cast<double>(N) * d.value();
        } else {
          close = false;
        }
      }
      if (!close) continue;
      pair_acc.add(b[r] * std::conj(b[s]) * prod);
    }
  }
  std::complex<double> pair_total = pair_acc.value();
  if (std::abs(pair_total.imag()) > 1e-9 * (1.0 + std::abs(pair_total.real())))
    throw invariant_violation_error(
        "kernel_identity_check: pair sum has a non-hermitian residue");
  rep.pair_sum = pow_i(kPi * kPi * static_cast<double>(N) / 2.0, n) *
                 pair_total.real();

  // Alpha route: dense S(alpha) on the extended grid, built per point
  // with exact integer phase indexing.
  std::vector<std::complex<double>> grid(static_cast<std::size_t>(total),
                                         {0.0, 0.0});
  for (std::int64_t r = 0; r < count; ++r) {
    std::complex<double> br = b[r];
    for_each_box_phase(set.points[static_cast<std::size_t>(r)], K_ext,
                       [&](std::int64_t flat, std::complex<double> phase) {
                         grid[static_cast<std::size_t>(flat)] += br * phase;
                       });
  }

  // phi(alpha_i/(2N)) along one axis; shared by all axes.
  std::vector<double> axis_weight(static_cast<std::size_t>(side));
  for (std::int64_t j = 0; j < side; ++j)
    axis_weight[static_cast<std::size_t>(j)] =
        fejer_phi(static_cast<double>(j - K_ext) /
                  (2.0 * static_cast<double>(N)));

  CompensatedSum alpha_acc;
  {
    std::vector<std::int64_t> digit(static_cast<std::size_t>(n), 0);
    for (std::int64_t flat = 0; flat < total; ++flat) {
      double w = 1.0;
      for (int i = 0; i < n; ++i)
        w *= axis_weight[static_cast<std::size_t>(
            digit[static_cast<std::size_t>(i)])];
      alpha_acc.add(w * std::norm(grid[static_cast<std::size_t>(flat)]));
      for (int i = n - 1; i >= 0; --i) {
        auto& d = digit[static_cast<std::size_t>(i)];
        if (++d < side) break;
        d = 0;
      }
    }
  }
  rep.alpha_sum = alpha_acc.value();

  // Unweighted sum over the inner box max|alpha_i| <= N.
  CompensatedSum box_acc;
  {
    const std::int64_t box_side = 2 * N + 1;
    std::vector<std::int64_t> digit(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> stride(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
      stride[static_cast<std::size_t>(i)] =
          stride[static_cast<std::size_t>(i) + 1] * side;
    std::int64_t box_total = 1;
    for (int i = 0; i < n; ++i) box_total *= box_side;
    for (std::int64_t idx = 0; idx < box_total; ++idx) {
      std::int64_t flat = 0;
      for (int i = 0; i < n; ++i)
        flat += (K_ext - N + digit[static_cast<std::size_t>(i)]) *
                stride[static_cast<std::size_t>(i)];
      box_acc.add(std::norm(grid[static_cast<std::size_t>(flat)]));
      for (int i = n - 1; i >= 0; --i) {
        auto& d = digit[static_cast<std::size_t>(i)];
        if (++d < box_side) break;
        d = 0;
      }
    }
  }
  rep.box_sum = box_acc.value();

  rep.tail_budget_value = tail_budget(n, N, K_ext, rep.b_l2);
  rep.within_budget =
      std::abs(rep.pair_sum - rep.alpha_sum) <= rep.tail_budget_value;
  rep.positivity_ok = rep.box_sum <= rep.alpha_sum * (1.0 + 1e-9) + 1e-12;

  if (!rep.within_budget)
    throw invariant_violation_error(
        "kernel_identity_check: |pair - alpha| = " +
        std::to_string(std::abs(rep.pair_sum - rep.alpha_sum)) +
        " exceeds the tail budget " + std::to_string(rep.tail_budget_value));
  if (!rep.positivity_ok)
    throw invariant_violation_error(
        "kernel_identity_check: unweighted box sum " +
        std::to_string(rep.box_sum) + " exceeds the weighted extended sum " +
        std::to_string(rep.alpha_sum));
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> dyadic_decompose(
    std::int64_t X) {
  if (X < 1) throw std::invalid_argument("dyadic_decompose: X must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t hi = X;
  while (hi >= 1) {
    std::int64_t lo = hi / 2 + 1;
    out.emplace_back(lo, hi);
    hi = lo - 1;
  }
  return out;
}

double slope_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("slope_fit: length mismatch");
  if (xs.size() < 2)
    throw std::invalid_argument("slope_fit: need at least two samples");
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("slope_fit: inputs must be positive");
  bool distinct = false;
  for (std::size_t i = 1; i < xs.size() && !distinct; ++i)
    if (xs[i] != xs[0]) distinct = true;
  if (!distinct)
    throw std::invalid_argument("slope_fit: need two distinct x values");

  const auto m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= m;
  my /= m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace sievelab
