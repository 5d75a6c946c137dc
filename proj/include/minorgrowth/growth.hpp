#pragma once

#include "minorgrowth/classify.hpp"
#include "minorgrowth/enumerate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minorgrowth {

/// e_n = (g_n / n!)^(1/n) and r_n = g_n / (n g_{n-1}) for each counted n.
struct GammaEstimate {
  struct Point {
    int n = 0;
    BigInt count;
    std::optional<double> e;      // absent at n = 0; 0 when g_n = 0
    std::optional<double> ratio;  // needs g_{n-1} > 0
    bool operator==(const Point&) const = default;
  };
  std::vector<Point> points;
  /// Sign of e_{n+1} - e_n between consecutive points that both have e.
  std::vector<int> trend;

  std::optional<double> e_at(int n) const;
  bool operator==(const GammaEstimate&) const = default;
};

GammaEstimate gamma_sequence(const CountTable& counts);

struct SandwichRow {
  int n = 0;
  BigInt lower;  // 2^n g_n
  BigInt apex;   // |AG_{n+1}|
  BigInt upper;  // (n+1) 2^n g_n
  bool holds = false;
  bool operator==(const SandwichRow&) const = default;
};

struct SandwichReport {
  std::vector<SandwichRow> rows;
  bool holds() const;
  bool operator==(const SandwichReport&) const = default;
};

/// 2^n g_n <= |AG_{n+1}| <= (n+1) 2^n g_n for 0 <= n < n_max (n_max <= 7).
SandwichReport apex_sandwich_check(const ClassSpec& spec, int n_max);

struct SupermultiplicativeRow {
  int m = 0;
  int n = 0;
  Rational lhs;  // g_{m+n} / (m+n)!
  Rational rhs;  // g_m g_n / (m! n!) / lower(e^2)
  bool holds = false;
  bool operator==(const SupermultiplicativeRow&) const = default;
};

struct SupermultiplicativeReport {
  std::vector<SupermultiplicativeRow> rows;
  bool holds() const;
  bool operator==(const SupermultiplicativeReport&) const = default;
};

/// f_k = g_k / (e^2 k!) satisfies f_{m+n} >= f_m f_n, checked for 1 <= m <= n
/// with m + n in the table. Dividing by a certified lower bound of e^2 only
/// makes the right side larger.
SupermultiplicativeReport supermultiplicative_check(const CountTable& counts);

struct AuditRow {
  int n = 0;
  BigInt count;
  std::optional<BigInt> bound;  // absent where the category states nothing
  bool exact = false;           // bound is an equality rather than a lower bound
  bool holds = true;
  /// Per-n constant implied by the two-sided bound, report only.
  std::optional<double> constant;
  bool operator==(const AuditRow&) const = default;
};

struct AuditReport {
  std::string category;
  std::string constant_label;  // what `constant` measures
  std::vector<AuditRow> rows;
  bool holds() const;
  /// Every reported constant is positive and finite.
  bool envelope_finite() const;
  bool operator==(const AuditReport&) const = default;
};

AuditReport bound_audit(const ClassSpec& spec, const GrowthCategory& category,
                        const CountTable& counts);

}  // namespace minorgrowth
