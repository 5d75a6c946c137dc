#pragma once

#include "minorgrowth/numeric.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace minorgrowth {

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultSeriesOrder = 32;

/// Power series truncated after z^order, with exact rational coefficients.
/// Used as exponential generating functions: the count of size n is n! * [z^n].
class Series {
 public:
  explicit Series(int order = kDefaultSeriesOrder);
  Series(int order, std::vector<Rational> coefficients);

  static Series constant(int order, const Rational& c);
  static Series variable(int order);  // z
  /// sum_n counts[n] z^n / n!
  static Series from_egf_counts(int order, const std::vector<BigInt>& counts);

  int order() const { return order_; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// n! [z^n]; throws if that is not a nonnegative integer.
  BigInt egf_count(int n) const;

  Series derivative() const;
  Series integral() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);

  bool operator==(const Series& other) const = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// exp(f), f(0) = 0, via n e_n = sum_{k=1}^n k f_k e_{n-k}.
Series exp_series(const Series& f);
/// f(g(z)), g(0) = 0.
Series compose(const Series& f, const Series& g);
/// 1 / (1 - f), f(0) = 0.
Series quasi_inverse(const Series& f);

/// F_0 = z, F_{k+1} = z exp(F_k): rooted labelled trees of height at most k.
Series bounded_height_series(int k, int order = kDefaultSeriesOrder);
/// Rooted labelled trees, by iterating the height recursion until it stabilizes.
Series rooted_tree_series(int order = kDefaultSeriesOrder);

// Counting series of the families with closed-form EGFs.
Series bell_series(int order = kDefaultSeriesOrder);           // exp(e^z - 1)
Series matching_series(int order = kDefaultSeriesOrder);       // exp(z + z^2/2)
Series path_forest_series(int order = kDefaultSeriesOrder);    // exp(z + z^2 / (2(1-z)))
Series star_forest_series(int order = kDefaultSeriesOrder);    // exp(z e^z - z^2/2)
Series forest_series(int order = kDefaultSeriesOrder);         // exp(T - T^2/2)
Series rooted_caterpillar_series(int order = kDefaultSeriesOrder);  // 1 / (1 - z e^z)

/// Closed interval [lo, hi] known to contain a root, with its image under x -> 1/x.
struct RootResult {
  double lo = 0;
  double hi = 0;
  double inverse_lo = 0;
  double inverse_hi = 0;

  double root() const { return 0.5 * (lo + hi); }
  double inverse() const { return 0.5 * (inverse_lo + inverse_hi); }
  double width() const { return hi - lo; }
};

inline constexpr double kDefaultRootTolerance = 1e-12;

/// Bisection on [lo, hi]; f(lo) and f(hi) must differ in sign (or one is 0).
/// The sign change is kept at every step, so a smaller tolerance only narrows
/// the interval returned for a larger one.
RootResult smallest_positive_root(const std::function<double(double)>& f, double lo, double hi,
                                  double tol = kDefaultRootTolerance);

/// F_k(x) evaluated through x -> x exp(F_{k-1}(x)); no truncation.
double bounded_height_value(int k, double x);

/// Roots rho_0..rho_kmax of F_k(rho) = 1.
std::vector<RootResult> rho_sequence(int k_max, double tol = kDefaultRootTolerance);

/// Inverse of the root of x e^x = 1 (caterpillar forests).
RootResult xi_constant(double tol = kDefaultRootTolerance);
/// Inverse of the smallest positive root of z exp(z/(1-z)) = 1.
RootResult nu_constant(double tol = kDefaultRootTolerance);

/// Certified rational enclosure of e^2 from the exponential series.
struct RationalInterval {
  Rational lo;
  Rational hi;
};
RationalInterval e_squared_bounds(int terms = 40);

}  // namespace minorgrowth
