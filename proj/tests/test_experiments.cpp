#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sievelab/enumerate.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/experiments.hpp"
#include "sievelab/expsum.hpp"
#include "sievelab/kernels.hpp"
#include "sievelab/rng.hpp"

using namespace sievelab;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

TorusPoint pt1(std::int64_t a, std::int64_t q) {
  return make_point({make_fraction(a, q)});
}

}  // namespace

TEST_CASE("majorant formulas on hand-checked inputs") {
  CHECK(majorant_gallagher(2, 10, 10) == 10100.0);
  CHECK(majorant_gallagher(1, 1, 1) == 2.0);
  CHECK(majorant_gallagher(3, 2, 1) == 9.0);

  CHECK(majorant_goal(2, 10, 10) == 1100.0);
  CHECK(majorant_goal(1, 5, 2) == 9.0);
  CHECK(majorant_goal(2, 7, 1) == 50.0);  // X = 1: N^n + 1

  CHECK(majorant_improved(2, 10, 10) == 2100.0);
  CHECK(majorant_improved(1, 9, 1) == 11.0);  // 1 + 1 + N
  CHECK(majorant_improved(2, 1, 4) == 81.0);

  CHECK(majorant_mv_classical(0.1, 10) == doctest::Approx(20.0));
  CHECK(majorant_mv_classical(0.5, 1) == doctest::Approx(3.0));
  CHECK(majorant_mv_classical(0.125, 8) == doctest::Approx(16.0));

  std::vector<double> N1 = {4.0}, d1 = {0.25};
  CHECK(majorant_thm2_product(N1, d1) == doctest::Approx(16.0));
  std::vector<double> N2 = {1.0, 1.0}, d2 = {0.5, 0.5};
  double s = (1.0 + std::sqrt(2.0)) * (1.0 + std::sqrt(2.0));
  CHECK(majorant_thm2_product(N2, d2) == doctest::Approx(s * s).epsilon(1e-12));
  std::vector<double> N3 = {3.0, 7.0}, d3 = {1.0 / 3.0, 1.0 / 7.0};
  CHECK(majorant_thm2_product(N3, d3) ==
        doctest::Approx(4.0 * 3.0 * 4.0 * 7.0).epsilon(1e-12));
}

TEST_CASE("majorants validate their inputs") {
  CHECK_THROWS_AS(majorant_gallagher(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(majorant_goal(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(majorant_improved(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(majorant_mv_classical(0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(majorant_mv_classical(0.7, 5), std::invalid_argument);
  std::vector<double> a = {1.0}, b = {0.25, 0.25};
  CHECK_THROWS_AS(majorant_thm2_product(a, b), std::invalid_argument);
}

TEST_CASE("ratio experiment on the single zero point") {
  for (std::int64_t N : {1, 2, 5}) {
    ExperimentReport rep = run_ratio_experiment(
        1, 1, N, SetKind::order_ball, CoeffKind::ones, 0);
    double side = static_cast<double>(2 * N + 1);
    CHECK(rep.lhs == doctest::Approx(side * side).epsilon(1e-12));
    CHECK(rep.l2 == doctest::Approx(side).epsilon(1e-12));
    CHECK(rep.ratio == doctest::Approx(side).epsilon(1e-12));
  }
}

TEST_CASE("ratio experiment on the two-element band example") {
  ExperimentReport rep =
      run_ratio_experiment(1, 2, 1, SetKind::S, CoeffKind::ones, 0);
  CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.l2 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rep.ratio == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(rep.majorants.count("gallagher") == 1);
  CHECK(rep.majorants.count("goal") == 1);
  CHECK(rep.majorants.count("improved") == 1);
  CHECK(rep.majorants.count("thm2_product") == 1);
  CHECK(rep.fitted_constant.has_value());
}

TEST_CASE("prime-line ratio experiment carries the exact value") {
  ExperimentReport rep = run_ratio_experiment(
      2, 10, 5, SetKind::prime_line_T, CoeffKind::ones, 0);
  REQUIRE(rep.exact_lhs.has_value());
  CHECK(*rep.exact_lhs == exact_lhs_prime_line(2, 10, 5));
  CHECK(std::abs(rep.lhs - static_cast<double>(*rep.exact_lhs)) <=
        1e-9 * static_cast<double>(*rep.exact_lhs));
  // Any other set or coefficient kind leaves the exact path empty.
  CHECK(!run_ratio_experiment(1, 4, 2, SetKind::S, CoeffKind::ones, 0)
             .exact_lhs.has_value());
  CHECK(!run_ratio_experiment(1, 4, 2, SetKind::prime_line_T,
                              CoeffKind::random_complex, 3)
             .exact_lhs.has_value());
}

TEST_CASE("classical check on hand-checked inputs") {
  // Single point: delta defaults to 1/2 and Cauchy-Schwarz gives the bound.
  std::vector<double> one_pt = {0.3};
  std::vector<std::complex<double>> coeffs = {{1.0, 0.5}, {0.2, -1.0},
                                              {-0.3, 0.0}};
  ClassicalCheckReport rep = run_classical_check(one_pt, 3, coeffs);
  CHECK(rep.delta == 0.5);
  CHECK(rep.lhs <= rep.majorant * (1.0 + 1e-10));
  CHECK(rep.point_count == 1);

  // Unit leading coefficient: each |S(x)| = 1, so LHS = point count.
  std::vector<double> pts = {0.1, 0.35, 0.62, 0.8};
  std::vector<std::complex<double>> delta_coeffs = {{1.0, 0.0}, {0.0, 0.0},
                                                    {0.0, 0.0}};
  ClassicalCheckReport rep2 = run_classical_check(pts, 3, delta_coeffs);
  CHECK(rep2.lhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep2.lhs <= rep2.majorant);
}

TEST_CASE("classical check rejects bad inputs") {
  std::vector<std::complex<double>> cs = {{1.0, 0.0}};
  std::vector<double> dup = {0.25, 1.25};  // same residue mod 1
  CHECK_THROWS_AS(run_classical_check(dup, 1, cs), std::invalid_argument);
  std::vector<double> ok = {0.25, 0.5};
  CHECK_THROWS_AS(run_classical_check(ok, 2, cs), std::invalid_argument);
  CHECK_THROWS_AS(run_classical_check({}, 1, cs), std::invalid_argument);
}

TEST_CASE("classical check holds over seeded Farey batches") {
  PointSet farey = enumerate_farey_line_Tprime(1, 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(mix_seed(2025, seed));
    std::vector<double> pts;
    for (const auto& p : farey.points)
      if (rng.below(2)) pts.push_back(p.coords[0].value());
    if (pts.empty()) pts.push_back(0.0);
    std::int64_t N = 1 + static_cast<std::int64_t>(rng.below(40));
    std::vector<std::complex<double>> coeffs;
    for (std::int64_t k = 0; k < N; ++k)
      coeffs.emplace_back(rng.uniform_pm1(), rng.uniform_pm1());
    ClassicalCheckReport rep = run_classical_check(pts, N, coeffs, seed);
    CHECK(rep.lhs <= rep.majorant * (1.0 + 1e-10));
    CHECK(rep.slack_ratio <= 1.0 + 1e-10);
  }
}

TEST_CASE("kernel identity on a singleton set") {
  for (std::int64_t N : {1, 2}) {
    PointSet set;
    set.n = 1;
    set.kind = SetKind::custom;
    set.points.push_back(pt1(0, 1));
    Eigen::VectorXcd b(1);
    b << std::complex<double>(1.0, 0.0);
    std::int64_t K = 50 * N;
    KernelIdentityReport rep = kernel_identity_check(set, b, N, K);
    double Nd = static_cast<double>(N);
    CHECK(rep.pair_sum == doctest::Approx(kPi2 * Nd / 2.0).epsilon(1e-12));
    CHECK(rep.alpha_sum ==
          doctest::Approx(v_truncated(0.0, N, K)).epsilon(1e-9));
    CHECK(rep.within_budget);
    CHECK(rep.positivity_ok);
  }

  // Two dimensions: both routes square the one-dimensional values.
  PointSet set2;
  set2.n = 2;
  set2.kind = SetKind::custom;
  set2.points.push_back(make_point({make_fraction(0, 1), make_fraction(0, 1)}));
  Eigen::VectorXcd b(1);
  b << std::complex<double>(0.5, -0.25);
  KernelIdentityReport rep = kernel_identity_check(set2, b, 2, 100);
  double want_pair = kPi2 * kPi2 * std::norm(std::complex<double>(0.5, -0.25));
  CHECK(rep.pair_sum == doctest::Approx(want_pair).epsilon(1e-12));
  double v1 = v_truncated(0.0, 2, 100);
  CHECK(rep.alpha_sum ==
        doctest::Approx(v1 * v1 * rep.b_l2).epsilon(1e-9));
}

TEST_CASE("kernel identity vanishes with zero coefficients") {
  PointSet set = enumerate_S(1, 4);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(set.size());
  KernelIdentityReport rep = kernel_identity_check(set, b, 2, 100);
  CHECK(rep.pair_sum == 0.0);
  CHECK(rep.alpha_sum == 0.0);
  CHECK(rep.box_sum == 0.0);
}

TEST_CASE("kernel identity on antipodal points has no cross terms") {
  PointSet set;
  set.n = 1;
  set.kind = SetKind::custom;
  set.points.push_back(pt1(0, 1));
  set.points.push_back(pt1(1, 2));
  Eigen::VectorXcd b(2);
  b << std::complex<double>(0.7, 0.1), std::complex<double>(-0.4, 0.9);
  for (std::int64_t N : {1, 3}) {
    KernelIdentityReport rep = kernel_identity_check(set, b, N, 50 * N);
    double Nd = static_cast<double>(N);
    double want = kPi2 * Nd / 2.0 * b.squaredNorm();
    CHECK(rep.pair_sum == doctest::Approx(want).epsilon(1e-12));
    CHECK(rep.within_budget);
    CHECK(rep.positivity_ok);
  }
}

TEST_CASE("kernel identity agrees across seeded vectors on real sets") {
  SplitMix64 rng(606);
  for (int n = 1; n <= 2; ++n) {
    PointSet set = enumerate_S(n, 4);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXcd b(set.size());
      for (Eigen::Index i = 0; i < b.size(); ++i)
        b(i) = std::complex<double>(rng.uniform_pm1(), rng.uniform_pm1());
      std::int64_t N = 1 + static_cast<std::int64_t>(rng.below(3));
      KernelIdentityReport rep = kernel_identity_check(set, b, N, 50 * N);
      CHECK(rep.within_budget);
      CHECK(rep.positivity_ok);
      CHECK(rep.box_sum <= rep.alpha_sum * (1.0 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("kernel identity validates resources and arguments") {
  PointSet big;
  big.n = 1;
  big.kind = SetKind::custom;
  for (std::int64_t q = 0; q < 201; ++q)
    big.points.push_back(pt1(q, 1000));
  Eigen::VectorXcd b = Eigen::VectorXcd::Ones(201);
  CHECK_THROWS_AS(kernel_identity_check(big, b, 1, 50), resource_cap_error);

  PointSet small;
  small.n = 1;
  small.kind = SetKind::custom;
  small.points.push_back(pt1(0, 1));
  Eigen::VectorXcd wrong = Eigen::VectorXcd::Ones(2);
  CHECK_THROWS_AS(kernel_identity_check(small, wrong, 1, 50),
                  std::invalid_argument);
  Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
  CHECK_THROWS_AS(kernel_identity_check(small, one, 1, 5),
                  std::invalid_argument);  // K_ext below 10 N
  PointSet plane;
  plane.n = 2;
  plane.kind = SetKind::custom;
  plane.points.push_back(make_point({make_fraction(0, 1), make_fraction(0, 1)}));
  CHECK_THROWS_AS(kernel_identity_check(plane, one, 500, 5000),
                  resource_cap_error);  // grid would have 1e8 cells
}

TEST_CASE("tail budget formula and monotonicity") {
  CHECK(tail_budget(1, 1, 100, 1.0) == doctest::Approx(0.12).epsilon(1e-12));
  CHECK(tail_budget(1, 1, 200, 1.0) < tail_budget(1, 1, 100, 1.0));
  CHECK(tail_budget(2, 3, 150, 2.0) ==
        doctest::Approx(3.0 * 2 * 36.0 / 150.0 * (kPi2 * 1.5) * 2.0)
            .epsilon(1e-12));
  CHECK_THROWS_AS(tail_budget(0, 1, 1, 1.0), std::invalid_argument);
}

TEST_CASE("dyadic ranges halve and partition") {
  using Range = std::pair<std::int64_t, std::int64_t>;
  std::vector<Range> want = {{5, 8}, {3, 4}, {2, 2}, {1, 1}};
  CHECK(dyadic_decompose(8) == want);
  CHECK(dyadic_decompose(1) == std::vector<Range>{{1, 1}});
  CHECK_THROWS_AS(dyadic_decompose(0), std::invalid_argument);

  for (std::int64_t X = 1; X <= 100'000; X = X < 64 ? X + 1 : X * 7 / 4) {
    auto ranges = dyadic_decompose(X);
    CHECK(ranges.front().second == X);
    CHECK(ranges.back().first == 1);
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      CHECK(ranges[i].first <= ranges[i].second);
      if (i + 1 < ranges.size())
        CHECK(ranges[i + 1].second == ranges[i].first - 1);
    }
  }
}

TEST_CASE("dyadic pieces partition the order ball by first denominator") {
  PointSet whole = enumerate_order_ball(2, 8);
  std::int64_t covered = 0;
  for (auto [lo, hi] : dyadic_decompose(8))
    for (const auto& p : whole.points)
      if (p.coords[0].den >= lo && p.coords[0].den <= hi) ++covered;
  CHECK(covered == whole.size());
}

TEST_CASE("slope_fit on exact power laws") {
  std::vector<double> xs = {1, 2, 3, 4, 5};
  std::vector<double> sq, cube, flat;
  for (double x : xs) {
    sq.push_back(x * x);
    cube.push_back(7.0 * x * x * x);
    flat.push_back(3.5);
  }
  CHECK(slope_fit(xs, sq) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(slope_fit(xs, cube) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(slope_fit(xs, flat) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("slope_fit validates input") {
  std::vector<double> one = {2.0}, oney = {4.0};
  CHECK_THROWS_AS(slope_fit(one, oney), std::invalid_argument);
  std::vector<double> xs = {1.0, 2.0}, bad = {1.0, -2.0};
  CHECK_THROWS_AS(slope_fit(xs, bad), std::invalid_argument);
  std::vector<double> same = {2.0, 2.0}, ys = {1.0, 2.0};
  CHECK_THROWS_AS(slope_fit(same, ys), std::invalid_argument);
  std::vector<double> short_y = {1.0};
  CHECK_THROWS_AS(slope_fit(xs, short_y), std::invalid_argument);
}

TEST_CASE("band growth has slope near n + 1") {
  std::vector<double> xs, ys;
  for (std::int64_t X : {8, 16, 32, 64}) {
    xs.push_back(static_cast<double>(X));
    ys.push_back(static_cast<double>(enumerate_S(2, X).size()));
  }
  double slope = slope_fit(xs, ys);
  CHECK(slope >= 2.6);
  CHECK(slope <= 3.2);
}
