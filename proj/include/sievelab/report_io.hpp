#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sievelab/experiments.hpp"
#include "sievelab/spacing.hpp"

namespace sievelab {

// Point-set summary emitted by the enumerate command.
struct EnumSummary {
  std::string set_kind;
  int n = 1;
  std::int64_t X = 1;
  std::int64_t count = 0;
  std::optional<double> min_spacing;  // absent below two points
  std::optional<std::vector<std::string>> points;  // "a1/q1,...,an/qn"
};

// Fixed "%.17g": enough digits that strtod recovers the exact double.
std::string format_real(double x);

// JSON schema shared by every report:
// {"experiment": ..., "params": {...}, "results": {...}, "tool_version": ...}
// Field order is fixed so reruns emit identical bytes.
nlohmann::ordered_json to_json(const ExperimentReport& rep);
nlohmann::ordered_json to_json(const SpacingReport& rep);
nlohmann::ordered_json to_json(const KernelIdentityReport& rep);
nlohmann::ordered_json to_json(const ClassicalCheckReport& rep);
nlohmann::ordered_json to_json(const EnumSummary& rep);
nlohmann::ordered_json to_json(const SweepReport& rep);

// Inverses of to_json; throw std::invalid_argument on schema mismatch.
ExperimentReport experiment_from_json(const nlohmann::json& j);
SpacingReport spacing_from_json(const nlohmann::json& j);
KernelIdentityReport kernel_identity_from_json(const nlohmann::json& j);
ClassicalCheckReport classical_from_json(const nlohmann::json& j);
EnumSummary enum_summary_from_json(const nlohmann::json& j);
SweepReport sweep_from_json(const nlohmann::json& j);

// CSV: one header plus one row per report, 17 significant digits for
// reals, exact decimal for integers, empty cells for absent optionals.
std::string csv_header(const ExperimentReport&);
std::string csv_row(const ExperimentReport& rep);
std::string csv_header(const SpacingReport&);
std::string csv_row(const SpacingReport& rep);
std::string csv_header(const KernelIdentityReport&);
std::string csv_row(const KernelIdentityReport& rep);
std::string csv_header(const ClassicalCheckReport&);
std::string csv_row(const ClassicalCheckReport& rep);
std::string csv_header(const EnumSummary&);
std::string csv_row(const EnumSummary& rep);

// Sweep CSV is a short series: x,y rows then a trailing slope row.
std::string sweep_csv(const SweepReport& rep);

}  // namespace sievelab
