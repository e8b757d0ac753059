#include "sievelab/report_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "sievelab/version.hpp"

namespace sievelab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Quote a CSV cell if it contains separators.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",;\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string opt_real(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

template <typename Fn>
auto schema_guard(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// to_json

nlohmann::ordered_json to_json(const ExperimentReport& rep) {
  ordered_json params;
  params["n"] = rep.n;
  params["X"] = rep.X;
  params["N"] = rep.N;
  params["set"] = rep.set_kind;
  params["coeff"] = rep.coeff_kind;
  params["seed"] = rep.seed;

  ordered_json results;
  results["lhs"] = rep.lhs;
  if (rep.exact_lhs) results["exact_lhs"] = *rep.exact_lhs;
  results["l2"] = rep.l2;
  results["ratio"] = rep.ratio;
  ordered_json maj;
  for (const auto& [k, v] : rep.majorants) maj[k] = v;
  results["majorants"] = maj;
  if (rep.fitted_constant) results["fitted_constant"] = *rep.fitted_constant;
  if (rep.slope) results["slope"] = *rep.slope;

  ordered_json j;
  j["experiment"] = rep.experiment;
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json to_json(const SpacingReport& rep) {
  ordered_json params;
  params["n"] = rep.n;
  params["X"] = rep.X;
  params["Y"] = rep.Y;

  ordered_json results;
  results["m_value"] = rep.m_value;
  results["argmax_point"] = rep.argmax_point.str();
  results["bound_value"] = rep.bound_value;
  results["ratio"] = rep.ratio;
  if (rep.per_point_counts) results["per_point_counts"] = *rep.per_point_counts;

  ordered_json j;
  j["experiment"] = "spacing";
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json to_json(const KernelIdentityReport& rep) {
  ordered_json params;
  params["n"] = rep.n;
  params["N"] = rep.N;
  params["K_ext"] = rep.K_ext;
  params["set_size"] = rep.set_size;

  ordered_json results;
  results["b_l2"] = rep.b_l2;
  results["pair_sum"] = rep.pair_sum;
  results["alpha_sum"] = rep.alpha_sum;
  results["box_sum"] = rep.box_sum;
  results["tail_budget"] = rep.tail_budget_value;
  results["within_budget"] = rep.within_budget;
  results["positivity_ok"] = rep.positivity_ok;

  ordered_json j;
  j["experiment"] = "kernel_identity";
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json to_json(const ClassicalCheckReport& rep) {
  ordered_json params;
  params["point_count"] = rep.point_count;
  params["N"] = rep.N;
  params["seed"] = rep.seed;

  ordered_json results;
  results["delta"] = rep.delta;
  results["lhs"] = rep.lhs;
  results["coeff_l2"] = rep.coeff_l2;
  results["majorant"] = rep.majorant;
  results["slack_ratio"] = rep.slack_ratio;

  ordered_json j;
  j["experiment"] = "classical";
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json to_json(const EnumSummary& rep) {
  ordered_json params;
  params["set"] = rep.set_kind;
  params["n"] = rep.n;
  params["X"] = rep.X;

  ordered_json results;
  results["count"] = rep.count;
  if (rep.min_spacing) results["min_spacing"] = *rep.min_spacing;
  if (rep.points) results["points"] = *rep.points;

  ordered_json j;
  j["experiment"] = "enumerate";
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json to_json(const SweepReport& rep) {
  ordered_json params;
  params["quantity"] = rep.quantity;
  params["n"] = rep.n;
  params["N"] = rep.N;
  params["Y"] = rep.Y;
  params["set"] = rep.set_kind;
  params["coeff"] = rep.coeff_kind;
  params["seed"] = rep.seed;

  ordered_json results;
  results["xs"] = rep.xs;
  results["ys"] = rep.ys;
  results["slope"] = rep.slope;

  ordered_json j;
  j["experiment"] = "sweep";
  j["params"] = params;
  j["results"] = results;
  j["tool_version"] = kToolVersion;
  return j;
}

// ---------------------------------------------------------------------------
// from_json

ExperimentReport experiment_from_json(const nlohmann::json& j) {
  return schema_guard("experiment_from_json", [&] {
    ExperimentReport rep;
    rep.experiment = j.at("experiment").get<std::string>();
    const auto& p = j.at("params");
    rep.n = p.at("n").get<int>();
    rep.X = p.at("X").get<std::int64_t>();
    rep.N = p.at("N").get<std::int64_t>();
    rep.set_kind = p.at("set").get<std::string>();
    rep.coeff_kind = p.at("coeff").get<std::string>();
    rep.seed = p.at("seed").get<std::uint64_t>();
    const auto& r = j.at("results");
    rep.lhs = r.at("lhs").get<double>();
    if (r.contains("exact_lhs"))
      rep.exact_lhs = r.at("exact_lhs").get<std::int64_t>();
    rep.l2 = r.at("l2").get<double>();
    rep.ratio = r.at("ratio").get<double>();
    for (const auto& [k, v] : r.at("majorants").items())
      rep.majorants[k] = v.get<double>();
    if (r.contains("fitted_constant"))
      rep.fitted_constant = r.at("fitted_constant").get<double>();
    if (r.contains("slope")) rep.slope = r.at("slope").get<double>();
    return rep;
  });
}

SpacingReport spacing_from_json(const nlohmann::json& j) {
  return schema_guard("spacing_from_json", [&] {
    SpacingReport rep;
    const auto& p = j.at("params");
    rep.n = p.at("n").get<int>();
    rep.X = p.at("X").get<std::int64_t>();
    rep.Y = p.at("Y").get<double>();
    const auto& r = j.at("results");
    rep.m_value = r.at("m_value").get<std::int64_t>();
    rep.argmax_point = parse_point(r.at("argmax_point").get<std::string>());
    rep.bound_value = r.at("bound_value").get<double>();
    rep.ratio = r.at("ratio").get<double>();
    if (r.contains("per_point_counts"))
      rep.per_point_counts =
          r.at("per_point_counts").get<std::vector<std::int64_t>>();
    return rep;
  });
}

KernelIdentityReport kernel_identity_from_json(const nlohmann::json& j) {
  return schema_guard("kernel_identity_from_json", [&] {
    KernelIdentityReport rep;
    const auto& p = j.at("params");
    rep.n = p.at("n").get<int>();
    rep.N = p.at("N").get<std::int64_t>();
    rep.K_ext = p.at("K_ext").get<std::int64_t>();
    rep.set_size = p.at("set_size").get<std::int64_t>();
    const auto& r = j.at("results");
    rep.b_l2 = r.at("b_l2").get<double>();
    rep.pair_sum = r.at("pair_sum").get<double>();
    rep.alpha_sum = r.at("alpha_sum").get<double>();
    rep.box_sum = r.at("box_sum").get<double>();
    rep.tail_budget_value = r.at("tail_budget").get<double>();
    rep.within_budget = r.at("within_budget").get<bool>();
    rep.positivity_ok = r.at("positivity_ok").get<bool>();
    return rep;
  });
}

ClassicalCheckReport classical_from_json(const nlohmann::json& j) {
  return schema_guard("classical_from_json", [&] {
    ClassicalCheckReport rep;
    const auto& p = j.at("params");
    rep.point_count = p.at("point_count").get<std::int64_t>();
    rep.N = p.at("N").get<std::int64_t>();
    rep.seed = p.at("seed").get<std::uint64_t>();
    const auto& r = j.at("results");
    rep.delta = r.at("delta").get<double>();
    rep.lhs = r.at("lhs").get<double>();
    rep.coeff_l2 = r.at("coeff_l2").get<double>();
    rep.majorant = r.at("majorant").get<double>();
    rep.slack_ratio = r.at("slack_ratio").get<double>();
    return rep;
  });
}

EnumSummary enum_summary_from_json(const nlohmann::json& j) {
  return schema_guard("enum_summary_from_json", [&] {
    EnumSummary rep;
    const auto& p = j.at("params");
    rep.set_kind = p.at("set").get<std::string>();
    rep.n = p.at("n").get<int>();
    rep.X = p.at("X").get<std::int64_t>();
    const auto& r = j.at("results");
    rep.count = r.at("count").get<std::int64_t>();
    if (r.contains("min_spacing"))
      rep.min_spacing = r.at("min_spacing").get<double>();
    if (r.contains("points"))
      rep.points = r.at("points").get<std::vector<std::string>>();
    return rep;
  });
}

SweepReport sweep_from_json(const nlohmann::json& j) {
  return schema_guard("sweep_from_json", [&] {
    SweepReport rep;
    const auto& p = j.at("params");
    rep.quantity = p.at("quantity").get<std::string>();
    rep.n = p.at("n").get<int>();
    rep.N = p.at("N").get<std::int64_t>();
    rep.Y = p.at("Y").get<double>();
    rep.set_kind = p.at("set").get<std::string>();
    rep.coeff_kind = p.at("coeff").get<std::string>();
    rep.seed = p.at("seed").get<std::uint64_t>();
    const auto& r = j.at("results");
    rep.xs = r.at("xs").get<std::vector<double>>();
    rep.ys = r.at("ys").get<std::vector<double>>();
    rep.slope = r.at("slope").get<double>();
    return rep;
  });
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_header(const ExperimentReport&) {
  return "experiment,n,X,N,set,coeff,seed,lhs,exact_lhs,l2,ratio,gallagher,"
         "goal,improved,mv_classical,thm2_product,fitted_constant,slope";
}

std::string csv_row(const ExperimentReport& rep) {
  auto maj = [&](const char* key) -> std::string {
    auto it = rep.majorants.find(key);
    return it == rep.majorants.end() ? std::string() : format_real(it->second);
  };
  std::string row;
  row += rep.experiment;
  row += ',' + std::to_string(rep.n);
  row += ',' + std::to_string(rep.X);
  row += ',' + std::to_string(rep.N);
  row += ',' + rep.set_kind;
  row += ',' + rep.coeff_kind;
  row += ',' + std::to_string(rep.seed);
  row += ',' + format_real(rep.lhs);
  row += ',' + (rep.exact_lhs ? std::to_string(*rep.exact_lhs) : std::string());
  row += ',' + format_real(rep.l2);
  row += ',' + format_real(rep.ratio);
  row += ',' + maj("gallagher");
  row += ',' + maj("goal");
  row += ',' + maj("improved");
  row += ',' + maj("mv_classical");
  row += ',' + maj("thm2_product");
  row += ',' + opt_real(rep.fitted_constant);
  row += ',' + opt_real(rep.slope);
  return row;
}

std::string csv_header(const SpacingReport&) {
  return "experiment,n,X,Y,m_value,argmax_point,bound_value,ratio";
}

std::string csv_row(const SpacingReport& rep) {
  std::string row = "spacing";
  row += ',' + std::to_string(rep.n);
  row += ',' + std::to_string(rep.X);
  row += ',' + format_real(rep.Y);
  row += ',' + std::to_string(rep.m_value);
  row += ',' + csv_cell(rep.argmax_point.str());
  row += ',' + format_real(rep.bound_value);
  row += ',' + format_real(rep.ratio);
  return row;
}

std::string csv_header(const KernelIdentityReport&) {
  return "experiment,n,N,K_ext,set_size,b_l2,pair_sum,alpha_sum,box_sum,"
         "tail_budget,within_budget,positivity_ok";
}

std::string csv_row(const KernelIdentityReport& rep) {
  std::string row = "kernel_identity";
  row += ',' + std::to_string(rep.n);
  row += ',' + std::to_string(rep.N);
  row += ',' + std::to_string(rep.K_ext);
  row += ',' + std::to_string(rep.set_size);
  row += ',' + format_real(rep.b_l2);
  row += ',' + format_real(rep.pair_sum);
  row += ',' + format_real(rep.alpha_sum);
  row += ',' + format_real(rep.box_sum);
  row += ',' + format_real(rep.tail_budget_value);
  row += rep.within_budget ? ",true" : ",false";
  row += rep.positivity_ok ? ",true" : ",false";
  return row;
}

std::string csv_header(const ClassicalCheckReport&) {
  return "experiment,point_count,N,seed,delta,lhs,coeff_l2,majorant,"
         "slack_ratio";
}

std::string csv_row(const ClassicalCheckReport& rep) {
  std::string row = "classical";
  row += ',' + std::to_string(rep.point_count);
  row += ',' + std::to_string(rep.N);
  row += ',' + std::to_string(rep.seed);
  row += ',' + format_real(rep.delta);
  row += ',' + format_real(rep.lhs);
  row += ',' + format_real(rep.coeff_l2);
  row += ',' + format_real(rep.majorant);
  row += ',' + format_real(rep.slack_ratio);
  return row;
}

std::string csv_header(const EnumSummary&) {
  return "experiment,set,n,X,count,min_spacing,points";
}

std::string csv_row(const EnumSummary& rep) {
  std::string row = "enumerate";
  row += ',' + rep.set_kind;
  row += ',' + std::to_string(rep.n);
  row += ',' + std::to_string(rep.X);
  row += ',' + std::to_string(rep.count);
  row += ',' + (rep.min_spacing ? format_real(*rep.min_spacing) : std::string());
  std::string pts;
  if (rep.points) {
    for (std::size_t i = 0; i < rep.points->size(); ++i) {
      if (i) pts += ';';
      pts += (*rep.points)[i];
    }
  }
  row += ',' + csv_cell(pts);
  return row;
}

std::string sweep_csv(const SweepReport& rep) {
  std::string out = "X," + rep.quantity + "\n";
  for (std::size_t i = 0; i < rep.xs.size(); ++i)
    out += format_real(rep.xs[i]) + "," + format_real(rep.ys[i]) + "\n";
  out += "slope," + format_real(rep.slope) + "\n";
  return out;
}

}  // namespace sievelab
