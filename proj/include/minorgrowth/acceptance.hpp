#pragma once

#include "minorgrowth/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace minorgrowth {

enum class Level { kFast, kFull };

Level parse_level(const std::string& text);
std::string to_string(Level level);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool diagnostic = false;  // reported, not a reproduction of the limit statement
  std::string detail;       // expected/actual on failure, a summary otherwise
  double seconds = 0;

  bool operator==(const CriterionResult&) const = default;
};

using MinorTest = std::function<bool(const Graph& h, const Graph& g)>;

struct AcceptanceOptions {
  Level level = Level::kFull;
  /// Minor test under scrutiny in criterion 8; replaced only for fault injection.
  MinorTest minor_test;
};

inline constexpr int kCriteria = 10;

/// Brute-force order used by the count-based criteria: 6 for fast, 7 for full.
int brute_limit(Level level);

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  3  oracle equivalence ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace minorgrowth
