#include "minorgrowth/series.hpp"

#include <cmath>
#include <limits>

namespace minorgrowth {

namespace {

void require_zero_constant(const Series& f, const char* op) {
  if (f[0] != 0) throw SeriesError(std::string(op) + " needs a series with zero constant term");
}

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw SeriesError("series truncation orders differ");
}

// z * f, truncated.
Series shift_up(const Series& f) {
  std::vector<Rational> c(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 1; n <= f.order(); ++n) c[n] = f[n - 1];
  return Series(f.order(), std::move(c));
}

}  // namespace

Series::Series(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw SeriesError("negative truncation order");
}

Series::Series(int order, std::vector<Rational> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  if (order < 0) throw SeriesError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(int order, const Rational& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::variable(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::from_egf_counts(int order, const std::vector<BigInt>& counts) {
  Series s(order);
  for (int n = 0; n <= order && n < static_cast<int>(counts.size()); ++n) {
    s.coeffs_[n] = Rational(counts[n], factorial(n));
  }
  return s;
}

BigInt Series::egf_count(int n) const {
  if (n < 0 || n > order_) throw SeriesError("coefficient index outside truncation order");
  Rational scaled = coeffs_[n] * Rational(factorial(n));
  if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0) {
    throw SeriesError("n! [z^n] is not a nonnegative integer at n = " + std::to_string(n));
  }
  return boost::multiprecision::numerator(scaled);
}

Series Series::derivative() const {
  Series out(order_);
  for (int n = 0; n < order_; ++n) out.coeffs_[n] = coeffs_[n + 1] * (n + 1);
  return out;
}

Series Series::integral() const {
  Series out(order_);
  for (int n = 1; n <= order_; ++n) out.coeffs_[n] = coeffs_[n - 1] / n;
  return out;
}

Series& Series::operator+=(const Series& other) {
  require_same_order(*this, other);
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_order(*this, other);
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 1);
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return Series(a.order(), std::move(c));
}

Series exp_series(const Series& f) {
  require_zero_constant(f, "exp_series");
  const int order = f.order();
  std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += f[k] * k * e[n - k];
    }
    e[n] = acc / n;
  }
  return Series(order, std::move(e));
}

Series compose(const Series& f, const Series& g) {
  require_same_order(f, g);
  require_zero_constant(g, "compose");
  Series out = Series::constant(f.order(), f[f.order()]);
  for (int i = f.order() - 1; i >= 0; --i) {
    out = out * g + Series::constant(f.order(), f[i]);
  }
  return out;
}

Series quasi_inverse(const Series& f) {
  require_zero_constant(f, "quasi_inverse");
  // q = 1 + f q, solved coefficientwise.
  const int order = f.order();
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  q[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += f[k] * q[n - k];
    }
    q[n] = acc;
  }
  return Series(order, std::move(q));
}

Series bounded_height_series(int k, int order) {
  if (k < 0) throw SeriesError("height must be nonnegative");
  Series f = Series::variable(order);
  for (int i = 0; i < k; ++i) f = shift_up(exp_series(f));
  return f;
}

Series rooted_tree_series(int order) {
  // F_k agrees with the full series up to z^(k+1).
  return bounded_height_series(std::max(order - 1, 0), order);
}

Series bell_series(int order) {
  Series ez_minus_one = exp_series(Series::variable(order)) - Series::constant(order, 1);
  return exp_series(ez_minus_one);
}

Series matching_series(int order) {
  Series z = Series::variable(order);
  return exp_series(z + z * z * Rational(1, 2));
}

Series path_forest_series(int order) {
  // One vertex, or a path on k >= 2 vertices with k!/2 labellings.
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  if (order >= 1) c[1] = 1;
  for (int k = 2; k <= order; ++k) c[k] = Rational(1, 2);
  return exp_series(Series(order, std::move(c)));
}

Series star_forest_series(int order) {
  // z e^z counts stars rooted at the centre; K_2 is counted twice there.
  Series z = Series::variable(order);
  Series stars = shift_up(exp_series(z)) - z * z * Rational(1, 2);
  return exp_series(stars);
}

Series forest_series(int order) {
  Series rooted = rooted_tree_series(order);
  Series trees = rooted - rooted * rooted * Rational(1, 2);
  return exp_series(trees);
}

Series rooted_caterpillar_series(int order) {
  return quasi_inverse(shift_up(exp_series(Series::variable(order))));
}

RootResult smallest_positive_root(const std::function<double(double)>& f, double lo, double hi,
                                  double tol) {
  if (!(lo < hi)) throw SeriesError("root bracket must satisfy lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  auto finish = [](double a, double b) {
    RootResult r;
    r.lo = a;
    r.hi = b;
    r.inverse_lo = b > 0 ? 1.0 / b : std::numeric_limits<double>::infinity();
    r.inverse_hi = a > 0 ? 1.0 / a : std::numeric_limits<double>::infinity();
    return r;
  };
  if (flo == 0) return finish(lo, lo);
  if (fhi == 0) return finish(hi, hi);
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi)) {
    throw SeriesError("no sign change on the root bracket");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (fm == 0) return finish(mid, mid);
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return finish(lo, hi);
}

double bounded_height_value(int k, double x) {
  double y = x;
  for (int i = 0; i < k; ++i) y = x * std::exp(y);
  return y;
}

std::vector<RootResult> rho_sequence(int k_max, double tol) {
  std::vector<RootResult> out;
  const double lo = std::exp(-1.0);
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(smallest_positive_root(
        [k](double x) { return bounded_height_value(k, x) - 1.0; }, lo, 1.0, tol));
  }
  return out;
}

RootResult xi_constant(double tol) {
  return smallest_positive_root([](double x) { return x * std::exp(x) - 1.0; }, 0.0, 1.0, tol);
}

RootResult nu_constant(double tol) {
  return smallest_positive_root([](double z) { return z * std::exp(z / (1.0 - z)) - 1.0; }, 0.0,
                                0.9, tol);
}

RationalInterval e_squared_bounds(int terms) {
  Rational sum = 0;
  Rational term = 1;
  for (int j = 0; j <= terms; ++j) {
    if (j > 0) term = term * 2 / j;
    sum += term;
  }
  // Tail after `terms`: next term times the geometric bound 1 / (1 - 2/(terms+2)).
  Rational next = term * 2 / (terms + 1);
  Rational tail = next * Rational(terms + 2, terms);
  return {sum, sum + tail};
}

}  // namespace minorgrowth
