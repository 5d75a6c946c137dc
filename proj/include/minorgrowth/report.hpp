#pragma once

// Report payloads for each command and their JSON form. Every number is
// written as a decimal string so nothing is lost to a consumer's float type.

#include "minorgrowth/acceptance.hpp"
#include "minorgrowth/classify.hpp"
#include "minorgrowth/enumerate.hpp"
#include "minorgrowth/growth.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minorgrowth {

using nlohmann::json;

struct Interval {
  double lo = 0;
  double hi = 0;
  bool operator==(const Interval&) const = default;
};

struct ClassifyResult {
  GrowthCategory category;
  bool growth_constant_exists = false;
  bool gamma_one = false;
  std::vector<std::string> minimized;
  bool operator==(const ClassifyResult&) const = default;
};

struct CountResult {
  CountTable table;
  bool operator==(const CountResult&) const = default;
};

struct ConstantsResult {
  double tol = 0;
  Interval xi_root;
  Interval xi;
  Interval nu_root;
  Interval nu;
  std::vector<Interval> rho;    // rho_0..rho_kmax
  std::vector<Interval> gamma;  // 1 / rho_k
  Interval e;                   // limit of gamma_k
  bool operator==(const ConstantsResult&) const = default;
};

struct GrowthResult {
  GammaEstimate gamma;
  AuditReport audit;
  SupermultiplicativeReport supermultiplicative;
  std::optional<SandwichReport> sandwich;
  bool operator==(const GrowthResult&) const = default;
};

struct VerifyResult {
  Level level = Level::kFull;
  std::vector<CriterionResult> criteria;
  bool passed() const;
  bool operator==(const VerifyResult&) const = default;
};

using Payload = std::variant<ClassifyResult, CountResult, ConstantsResult, GrowthResult, VerifyResult>;

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::string spec;  // empty when the command takes none
  Payload result;
  std::string version;
  double elapsed_ms = 0;

  bool operator==(const Report&) const = default;
};

/// Equal in everything but elapsed time.
bool same_except_timing(const Report& a, const Report& b);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
double parse_double(const std::string& text);

void to_json(json& j, const GrowthCategory& c);
void from_json(const json& j, GrowthCategory& c);
void to_json(json& j, const CountTable& t);
void from_json(const json& j, CountTable& t);
void to_json(json& j, const Report& r);
void from_json(const json& j, Report& r);

ConstantsResult compute_constants(int k_max, double tol);

}  // namespace minorgrowth
