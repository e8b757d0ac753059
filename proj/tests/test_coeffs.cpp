#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sievelab/coeff_box.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/expsum.hpp"
#include "sievelab/rng.hpp"

using namespace sievelab;

TEST_CASE("ones box is all ones") {
  CoeffBox c = make_coeffs(1, 1, CoeffKind::ones);
  REQUIRE(c.size() == 3);
  REQUIRE(c.has_dense());
  for (std::int64_t a = -1; a <= 1; ++a) {
    std::array<std::int64_t, 1> alpha{a};
    CHECK(c.at(alpha) == std::complex<double>{1.0, 0.0});
  }
  CHECK(l2_norm_sq(c) == 3.0);
  CHECK(l1_norm(c) == 3.0);
}

TEST_CASE("delta box has a single unit entry at the origin") {
  CoeffBox c = make_coeffs(2, 0, CoeffKind::delta);
  REQUIRE(c.size() == 1);
  std::array<std::int64_t, 2> origin{0, 0};
  CHECK(c.at(origin) == std::complex<double>{1.0, 0.0});

  CoeffBox d = make_coeffs(2, 1, CoeffKind::delta);
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b) {
      std::array<std::int64_t, 2> alpha{a, b};
      std::complex<double> want =
          (a == 0 && b == 0) ? std::complex<double>{1.0, 0.0}
                             : std::complex<double>{0.0, 0.0};
      CHECK(d.at(alpha) == want);
    }
  CHECK(l2_norm_sq(d) == 1.0);
}

TEST_CASE("random boxes are deterministic in the seed") {
  CoeffBox a = make_coeffs(1, 2, CoeffKind::random_complex, 42);
  CoeffBox b = make_coeffs(1, 2, CoeffKind::random_complex, 42);
  CoeffBox c = make_coeffs(1, 2, CoeffKind::random_complex, 43);
  REQUIRE(a.values.size() == b.values.size());
  bool same = true, differs = false;
  for (std::int64_t i = 0; i < a.values.size(); ++i) {
    same = same && a.values[i] == b.values[i];
    differs = differs || a.values[i] != c.values[i];
    CHECK(std::abs(a.values[i].real()) <= 1.0);
    CHECK(std::abs(a.values[i].imag()) <= 1.0);
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("norms match naive accumulation") {
  CHECK(l2_norm_sq(make_coeffs(2, 1, CoeffKind::ones)) == 9.0);

  CoeffBox zero;
  zero.n = 2;
  zero.N = 1;
  zero.values = Eigen::VectorXcd::Zero(9);
  CHECK(l2_norm_sq(zero) == 0.0);
  CHECK(l1_norm(zero) == 0.0);

  // Unit-modulus phases: the squared norm is just the entry count.
  CoeffBox phases;
  phases.n = 1;
  phases.N = 3;
  phases.values.resize(7);
  for (std::int64_t a = -3; a <= 3; ++a)
    phases.values[a + 3] = unit_phase(make_fraction(-a, 3));
  CHECK(l2_norm_sq(phases) == doctest::Approx(7.0).epsilon(1e-12));

  CoeffBox r = make_coeffs(2, 3, CoeffKind::random_complex, 7);
  double l1 = 0.0, l2 = 0.0;
  for (std::int64_t i = 0; i < r.values.size(); ++i) {
    l1 += std::abs(r.values[i]);
    l2 += std::norm(r.values[i]);
  }
  CHECK(l2_norm_sq(r) == doctest::Approx(l2).epsilon(1e-12));
  CHECK(l1_norm(r) == doctest::Approx(l1).epsilon(1e-12));
}

TEST_CASE("index_of is the row-major flat index") {
  CoeffBox c = make_coeffs(2, 2, CoeffKind::ones);
  std::array<std::int64_t, 2> lo{-2, -2}, hi{2, 2}, mid{0, 1};
  CHECK(c.index_of(lo) == 0);
  CHECK(c.index_of(hi) == c.size() - 1);
  CHECK(c.index_of(mid) == 2 * 5 + 3);
  std::array<std::int64_t, 2> outside{3, 0};
  CHECK_THROWS_AS(c.index_of(outside), std::out_of_range);
  std::array<std::int64_t, 1> short_alpha{0};
  CHECK_THROWS_AS(c.index_of(short_alpha), std::invalid_argument);
}

TEST_CASE("rank-1 dense values equal the factor product") {
  SplitMix64 rng(314);
  CoeffBox c;
  c.n = 2;
  c.N = 3;
  c.rank1 = true;
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXcd f(c.side());
    for (std::int64_t j = 0; j < c.side(); ++j)
      f[j] = std::complex<double>(rng.uniform_pm1(), rng.uniform_pm1());
    c.factors.push_back(f);
  }
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      std::array<std::int64_t, 2> alpha{a, b};
      std::complex<double> want = c.factors[0][a + 3] * c.factors[1][b + 3];
      CHECK(std::abs(c.at(alpha) - want) < 1e-15);
    }
}

TEST_CASE("dense boxes above the cap are refused, rank-1 is not") {
  CHECK_THROWS_AS(make_coeffs(3, 200, CoeffKind::random_complex),
                  resource_cap_error);
  CHECK_THROWS_AS(make_coeffs(3, 200, CoeffKind::delta), resource_cap_error);
  CoeffBox big = make_coeffs(3, 200, CoeffKind::ones);
  CHECK(!big.has_dense());
  CHECK(big.rank1);
  double side = 401.0;
  CHECK(l2_norm_sq(big) == doctest::Approx(side * side * side));
}

TEST_CASE("make_coeffs validates parameters") {
  CHECK_THROWS_AS(make_coeffs(0, 1, CoeffKind::ones), std::invalid_argument);
  CHECK_THROWS_AS(make_coeffs(1, -1, CoeffKind::ones), std::invalid_argument);
  CHECK_THROWS_AS(make_coeffs(1, 1, CoeffKind::file), std::invalid_argument);
}

TEST_CASE("coeff kind names round-trip") {
  for (CoeffKind k : {CoeffKind::ones, CoeffKind::random_complex,
                      CoeffKind::delta, CoeffKind::file})
    CHECK(parse_coeff_kind(coeff_kind_name(k)) == k);
  CHECK(parse_coeff_kind("random") == CoeffKind::random_complex);
  CHECK_THROWS_AS(parse_coeff_kind("nope"), std::invalid_argument);
}
