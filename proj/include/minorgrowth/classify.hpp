#pragma once

#include "minorgrowth/class_spec.hpp"
#include "minorgrowth/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace minorgrowth {

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Factorial {
  bool operator==(const Factorial&) const = default;
};
struct AlmostFactorial {
  bool operator==(const AlmostFactorial&) const = default;
};
struct SemiFactorial {
  int k = 2;
  bool lower_bound_only = false;  // the search cap was reached
  bool operator==(const SemiFactorial&) const = default;
};
struct Exponential {
  bool operator==(const Exponential&) const = default;
};

/// g_n = sum_j coefficients[j] * C(n, j) for n >= threshold.
struct PolynomialGrowth {
  std::vector<BigInt> coefficients;
  int threshold = 0;
  /// Smallest n0 with the polynomial equal to the brute count for every
  /// n0 <= n <= checked_up_to; empty if it fails at checked_up_to.
  std::optional<int> empirical_threshold;
  int checked_up_to = -1;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt operator()(int n) const;
  bool operator==(const PolynomialGrowth&) const = default;
};

struct ConstantGrowth {
  int value = 1;  // 0 or 1
  int threshold = 0;
  bool operator==(const ConstantGrowth&) const = default;
};

using GrowthCategory = std::variant<Factorial, AlmostFactorial, SemiFactorial, Exponential,
                                    PolynomialGrowth, ConstantGrowth>;

/// "Factorial", "AlmostFactorial", ...
std::string category_name(const GrowthCategory& c);

struct ClassifyOptions {
  /// Largest connected graph tried when looking for unbounded multiplicity.
  int semifactorial_cap = 8;
  /// Only try graphs of maximum degree below the smallest excluded star forest.
  bool restrict_degree = true;
  /// Largest pattern order enumerated for the polynomial.
  int pattern_cap = 10;
  /// Brute counts up to this n are compared with the polynomial (-1: skip).
  int empirical_n_max = 7;
};

GrowthCategory classify(const ClassSpec& spec, const ClassifyOptions& options = {});

/// Largest connected graph of unbounded multiplicity, for semi-factorial classes.
SemiFactorial semifactorial_k(const ClassSpec& spec, const ClassifyOptions& options = {});

/// Pattern polynomial and threshold for polynomial classes.
PolynomialGrowth polynomial_of(const ClassSpec& spec, const ClassifyOptions& options = {});

/// Sufficient condition: every excluded minor is 2-connected.
bool exists_growth_constant(const ClassSpec& spec);

/// The class contains all paths, but neither all caterpillars nor all of the
/// apex class of path forests.
bool gamma_one_test(const ClassSpec& spec);

/// Drops duplicates and any graph that has another listed graph as a minor.
ClassSpec minimize_obstructions(const ClassSpec& spec);

}  // namespace minorgrowth
