#include "minorgrowth/growth.hpp"

#include "minorgrowth/series.hpp"

#include <algorithm>
#include <cmath>

namespace minorgrowth {

namespace {

double log_of(const BigInt& x) {
  // Counts here stay far below the double range.
  return std::log(x.convert_to<double>());
}

template <typename Rows>
bool all_hold(const Rows& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
}

}  // namespace

std::optional<double> GammaEstimate::e_at(int n) const {
  for (const auto& p : points) {
    if (p.n == n) return p.e;
  }
  return std::nullopt;
}

GammaEstimate gamma_sequence(const CountTable& counts) {
  if (counts.empty()) throw std::invalid_argument("gamma_sequence: empty count table");
  GammaEstimate out;
  for (const auto& [n, entry] : counts.entries()) {
    GammaEstimate::Point p;
    p.n = n;
    p.count = entry.value();
    if (n > 0) {
      p.e = p.count == 0 ? 0.0 : std::exp((log_of(p.count) - log_of(factorial(n))) / n);
    }
    if (n > 0 && counts.has(n - 1) && counts.at(n - 1) > 0) {
      p.ratio = std::exp(log_of(p.count) - std::log(static_cast<double>(n)) -
                         log_of(counts.at(n - 1)));
      if (p.count == 0) p.ratio = 0.0;
    }
    out.points.push_back(std::move(p));
  }
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    const auto& a = out.points[i - 1];
    const auto& b = out.points[i];
    if (a.e && b.e && b.n == a.n + 1) out.trend.push_back((*b.e > *a.e) - (*b.e < *a.e));
  }
  return out;
}

bool SandwichReport::holds() const { return all_hold(rows); }

SandwichReport apex_sandwich_check(const ClassSpec& spec, int n_max) {
  if (n_max > 7) throw CapExceeded("apex_sandwich_check: n_max over 7");
  SandwichReport out;
  for (int n = 0; n < n_max; ++n) {
    SandwichRow row;
    row.n = n;
    BigInt g = count_members(spec, n);
    row.lower = pow2(n) * g;
    row.upper = BigInt(n + 1) * row.lower;
    row.apex = apex_count(spec, n + 1);
    row.holds = row.lower <= row.apex && row.apex <= row.upper;
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool SupermultiplicativeReport::holds() const { return all_hold(rows); }

SupermultiplicativeReport supermultiplicative_check(const CountTable& counts) {
  const Rational e2_lo = e_squared_bounds().lo;
  auto scaled = [&](int k) { return Rational(counts.at(k), factorial(k)); };
  SupermultiplicativeReport out;
  for (const auto& [total, entry] : counts.entries()) {
    for (int m = 1; 2 * m <= total; ++m) {
      const int n = total - m;
      if (!counts.has(m) || !counts.has(n)) continue;
      SupermultiplicativeRow row;
      row.m = m;
      row.n = n;
      row.lhs = scaled(total);
      row.rhs = scaled(m) * scaled(n) / e2_lo;
      row.holds = row.lhs >= row.rhs;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

bool AuditReport::holds() const { return all_hold(rows); }

bool AuditReport::envelope_finite() const {
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) {
    return !r.constant || (std::isfinite(*r.constant) && *r.constant > 0);
  });
}

AuditReport bound_audit(const ClassSpec& /*spec*/, const GrowthCategory& category,
                        const CountTable& counts) {
  AuditReport out;
  out.category = category_name(category);
  for (const auto& [n, entry] : counts.entries()) {
    AuditRow row;
    row.n = n;
    row.count = entry.value();
    const double log_g = row.count > 0 ? log_of(row.count) : -INFINITY;
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Factorial>) {
            out.constant_label = "(g_n/n!)^(1/n)";
            if (n >= 2) row.bound = factorial(n);
            if (n >= 1) row.constant = std::exp((log_g - log_of(factorial(n))) / n);
          } else if constexpr (std::is_same_v<T, AlmostFactorial>) {
            out.constant_label = "(g_n/B(n))^(1/n)";
            row.bound = bell(n);
            if (n >= 1) row.constant = std::exp((log_g - log_of(bell(n))) / n);
          } else if constexpr (std::is_same_v<T, SemiFactorial>) {
            out.constant_label = "(g_n/n^((1-1/k)n))^(1/n)";
            row.bound = double_factorial(n);
            if (n >= 1) {
              const double expo = (1.0 - 1.0 / c.k) * n * std::log(static_cast<double>(n));
              row.constant = std::exp((log_g - expo) / n);
            }
          } else if constexpr (std::is_same_v<T, Exponential>) {
            out.constant_label = "g_n^(1/n)";
            if (n >= 1) {
              row.bound = pow2(n - 1);
              row.constant = std::exp(log_g / n);
            }
          } else if constexpr (std::is_same_v<T, PolynomialGrowth>) {
            const int from = c.empirical_threshold.value_or(c.threshold);
            if (n >= from) {
              row.bound = c(n);
              row.exact = true;
            }
          } else {
            if (n >= c.threshold) {
              row.bound = c.value;
              row.exact = true;
            }
          }
        },
        category);
    if (row.bound) row.holds = row.exact ? row.count == *row.bound : row.count >= *row.bound;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace minorgrowth
