#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "sievelab/report_io.hpp"
#include "sievelab/rng.hpp"
#include "sievelab/version.hpp"

using namespace sievelab;

namespace {

std::size_t count_commas(const std::string& s) {
  std::size_t n = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

ExperimentReport sample_experiment(bool with_optionals) {
  ExperimentReport r;
  r.experiment = "ratio";
  r.n = 2;
  r.X = 10;
  r.N = 5;
  r.set_kind = "prime_line_T";
  r.coeff_kind = "ones";
  r.seed = 12345678901234567ULL;
  r.lhs = 1234.5678901234567;
  r.l2 = 121.0;
  r.ratio = r.lhs / r.l2;
  r.majorants["gallagher"] = 100025.0;
  r.majorants["goal"] = 1025.0;
  r.majorants["improved"] = 1135.0;
  r.majorants["thm2_product"] = 481.99792580622574;
  if (with_optionals) {
    r.exact_lhs = 75;
    r.fitted_constant = 0.061224489795918394;
    r.slope = 2.886525118552731;
  }
  return r;
}

}  // namespace

TEST_CASE("format_real round-trips through strtod") {
  SplitMix64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    double x = (rng.uniform_pm1()) *
               std::pow(10.0, static_cast<double>(rng.below(41)) - 20.0);
    std::string s = format_real(x);
    double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == x);
  }
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(3.0) == "3");
  CHECK(std::strtod(format_real(0.1).c_str(), nullptr) == 0.1);
}

TEST_CASE("experiment report JSON round-trip") {
  for (bool opt : {true, false}) {
    ExperimentReport r = sample_experiment(opt);
    nlohmann::ordered_json j = to_json(r);
    CHECK(j.at("experiment") == "ratio");
    CHECK(j.at("tool_version") == std::string(kToolVersion));
    CHECK(j.contains("params"));
    CHECK(j.contains("results"));
    ExperimentReport back =
        experiment_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.experiment == r.experiment);
    CHECK(back.n == r.n);
    CHECK(back.X == r.X);
    CHECK(back.N == r.N);
    CHECK(back.set_kind == r.set_kind);
    CHECK(back.coeff_kind == r.coeff_kind);
    CHECK(back.seed == r.seed);
    CHECK(back.lhs == r.lhs);
    CHECK(back.l2 == r.l2);
    CHECK(back.ratio == r.ratio);
    CHECK(back.majorants == r.majorants);
    CHECK(back.exact_lhs == r.exact_lhs);
    CHECK(back.fitted_constant == r.fitted_constant);
    CHECK(back.slope == r.slope);
  }
}

TEST_CASE("spacing report JSON round-trip") {
  SpacingReport r;
  r.n = 1;
  r.X = 4;
  r.Y = 0.2;
  r.m_value = 3;
  r.argmax_point = parse_point("1/2");
  r.bound_value = 7.4;
  r.ratio = 3.0 / 7.4;
  for (bool with_counts : {false, true}) {
    if (with_counts) r.per_point_counts = std::vector<std::int64_t>{3, 3, 3, 2, 2};
    SpacingReport back = spacing_from_json(nlohmann::json::parse(to_json(r).dump()));
    CHECK(back.n == r.n);
    CHECK(back.X == r.X);
    CHECK(back.Y == r.Y);
    CHECK(back.m_value == r.m_value);
    CHECK(back.argmax_point == r.argmax_point);
    CHECK(back.bound_value == r.bound_value);
    CHECK(back.ratio == r.ratio);
    CHECK(back.per_point_counts == r.per_point_counts);
  }
}

TEST_CASE("kernel identity report JSON round-trip") {
  KernelIdentityReport r;
  r.n = 2;
  r.N = 4;
  r.K_ext = 200;
  r.set_size = 18;
  r.b_l2 = 9.25;
  r.pair_sum = 123.456;
  r.alpha_sum = 123.455;
  r.box_sum = 88.25;
  r.tail_budget_value = 0.75;
  r.within_budget = true;
  r.positivity_ok = true;
  KernelIdentityReport back =
      kernel_identity_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back.n == r.n);
  CHECK(back.N == r.N);
  CHECK(back.K_ext == r.K_ext);
  CHECK(back.set_size == r.set_size);
  CHECK(back.b_l2 == r.b_l2);
  CHECK(back.pair_sum == r.pair_sum);
  CHECK(back.alpha_sum == r.alpha_sum);
  CHECK(back.box_sum == r.box_sum);
  CHECK(back.tail_budget_value == r.tail_budget_value);
  CHECK(back.within_budget == r.within_budget);
  CHECK(back.positivity_ok == r.positivity_ok);
}

TEST_CASE("classical report JSON round-trip") {
  ClassicalCheckReport r;
  r.point_count = 12;
  r.N = 50;
  r.delta = 0.04;
  r.lhs = 321.5;
  r.coeff_l2 = 17.25;
  r.majorant = 1293.75;
  r.slack_ratio = r.lhs / r.majorant;
  r.seed = 99;
  ClassicalCheckReport back =
      classical_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back.point_count == r.point_count);
  CHECK(back.N == r.N);
  CHECK(back.delta == r.delta);
  CHECK(back.lhs == r.lhs);
  CHECK(back.coeff_l2 == r.coeff_l2);
  CHECK(back.majorant == r.majorant);
  CHECK(back.slack_ratio == r.slack_ratio);
  CHECK(back.seed == r.seed);
}

TEST_CASE("enumeration summary JSON round-trip") {
  EnumSummary r;
  r.set_kind = "order_ball";
  r.n = 1;
  r.X = 3;
  r.count = 4;
  for (bool full : {false, true}) {
    if (full) {
      r.min_spacing = 1.0 / 6.0;
      r.points = std::vector<std::string>{"0/1", "1/2", "1/3", "2/3"};
    }
    EnumSummary back =
        enum_summary_from_json(nlohmann::json::parse(to_json(r).dump()));
    CHECK(back.set_kind == r.set_kind);
    CHECK(back.n == r.n);
    CHECK(back.X == r.X);
    CHECK(back.count == r.count);
    CHECK(back.min_spacing == r.min_spacing);
    CHECK(back.points == r.points);
  }
}

TEST_CASE("sweep report JSON round-trip") {
  SweepReport r;
  r.quantity = "set_size";
  r.n = 2;
  r.N = 1;
  r.Y = 0.25;
  r.set_kind = "S";
  r.coeff_kind = "ones";
  r.seed = 5;
  r.xs = {8, 16, 32, 64};
  r.ys = {122, 804, 6436, 48048};
  r.slope = 2.886525118552731;
  SweepReport back = sweep_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back.quantity == r.quantity);
  CHECK(back.xs == r.xs);
  CHECK(back.ys == r.ys);
  CHECK(back.slope == r.slope);
  CHECK(back.set_kind == r.set_kind);
}

TEST_CASE("from_json rejects malformed documents") {
  nlohmann::json empty = nlohmann::json::object();
  CHECK_THROWS_AS(experiment_from_json(empty), std::invalid_argument);
  CHECK_THROWS_AS(spacing_from_json(empty), std::invalid_argument);
  CHECK_THROWS_AS(kernel_identity_from_json(empty), std::invalid_argument);
  CHECK_THROWS_AS(classical_from_json(empty), std::invalid_argument);
  CHECK_THROWS_AS(enum_summary_from_json(empty), std::invalid_argument);
  CHECK_THROWS_AS(sweep_from_json(empty), std::invalid_argument);
}

TEST_CASE("CSV rows line up with their headers") {
  for (bool opt : {true, false}) {
    ExperimentReport r = sample_experiment(opt);
    CHECK(count_commas(csv_row(r)) == count_commas(csv_header(r)));
  }
  SpacingReport sp;
  sp.argmax_point = parse_point("1/2,1/3");
  CHECK(count_commas(csv_row(sp)) == count_commas(csv_header(sp)));

  KernelIdentityReport k;
  CHECK(count_commas(csv_row(k)) == count_commas(csv_header(k)));
  ClassicalCheckReport c;
  CHECK(count_commas(csv_row(c)) == count_commas(csv_header(c)));
  EnumSummary e;
  e.points = std::vector<std::string>{"1/2,0/1", "0/1,1/2"};
  CHECK(count_commas(csv_row(e)) == count_commas(csv_header(e)));
}

TEST_CASE("optional CSV cells are empty when absent") {
  ExperimentReport r = sample_experiment(false);
  std::string row = csv_row(r);
  CHECK(row.find(",,") != std::string::npos);  // empty exact_lhs cell
  ExperimentReport full = sample_experiment(true);
  CHECK(csv_row(full).find(",75,") != std::string::npos);
}

TEST_CASE("sweep CSV carries the series and a slope row") {
  SweepReport r;
  r.quantity = "set_size";
  r.xs = {8, 16};
  r.ys = {122, 804};
  r.slope = 2.72;
  std::string csv = sweep_csv(r);
  CHECK(csv.find("X,set_size\n") == 0);
  CHECK(csv.find("8,122\n") != std::string::npos);
  CHECK(csv.find("16,804\n") != std::string::npos);
  CHECK(csv.find("slope,") != std::string::npos);
  CHECK(csv.back() == '\n');
}
