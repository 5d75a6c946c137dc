#include "minorgrowth/classify.hpp"

#include "minorgrowth/enumerate.hpp"
#include "minorgrowth/minor.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

namespace minorgrowth {

namespace {

enum class Tag { kFactorial, kAlmostFactorial, kSemiFactorial, kExponential, kPolynomial, kConstant };

template <typename Pred>
bool none_is(const ClassSpec& spec, Pred pred) {
  const auto& ex = spec.excluded();
  return std::none_of(ex.begin(), ex.end(), [&](const ExcludedMinor& e) { return pred(e.graph); });
}

Tag chain(const ClassSpec& spec) {
  if (spec.empty()) throw ClassifyError("empty excluded-minor list: the class would be all graphs");
  if (none_is(spec, is_path_forest)) return Tag::kFactorial;
  if (none_is(spec, is_star_forest)) return Tag::kAlmostFactorial;
  if (none_is(spec, is_matching_graph)) return Tag::kSemiFactorial;
  if (none_is(spec, is_star_plus_isolated)) return Tag::kExponential;
  if (none_is(spec, has_at_most_one_edge)) return Tag::kPolynomial;
  return Tag::kConstant;
}

// r copies of c are in the class for every r. A model of H in many copies
// puts each component of H inside one copy, so comp(H) copies suffice.
bool unbounded_multiplicity(const ClassSpec& spec, const Graph& c) {
  for (const auto& e : spec.excluded()) {
    const int copies = std::max<int>(1, static_cast<int>(component_sets(e.graph).size()));
    if (copies * c.order() > Graph::kMaxVertices) {
      throw ClassifyError("multiplicity test needs more than 64 vertices");
    }
    Graph host(0);
    for (int i = 0; i < copies; ++i) host = disjoint_union(host, c);
    if (is_minor(e.graph, host)) return false;
  }
  return true;
}

ConstantGrowth constant_of(const ClassSpec& spec) {
  ConstantGrowth out;
  out.value = none_is(spec, [](const Graph& g) { return g.size() == 0; }) ? 1 : 0;
  for (const auto& e : spec.excluded()) {
    if (has_at_most_one_edge(e.graph)) out.threshold = std::max(out.threshold, e.graph.order());
  }
  return out;
}

}  // namespace

BigInt PolynomialGrowth::operator()(int n) const {
  BigInt sum = 0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    sum += coefficients[j] * binomial(n, static_cast<int>(j));
  }
  return sum;
}

std::string category_name(const GrowthCategory& c) {
  static const char* names[] = {"Factorial",   "AlmostFactorial", "SemiFactorial",
                                "Exponential", "Polynomial",      "Constant"};
  return names[c.index()];
}

SemiFactorial semifactorial_k(const ClassSpec& spec, const ClassifyOptions& options) {
  if (chain(spec) != Tag::kSemiFactorial) throw ClassifyError("class is not semi-factorial");
  int degree_limit = std::numeric_limits<int>::max();
  if (options.restrict_degree) {
    for (const auto& e : spec.excluded()) {
      if (is_star_forest(e.graph)) degree_limit = std::min(degree_limit, e.graph.order());
    }
  }

  // Level j holds the connected graphs on j vertices with unbounded
  // multiplicity, one per isomorphism class. Every connected graph has a
  // vertex whose deletion keeps it connected, and the property is closed
  // under connected minors, so level j+1 grows from level j.
  SemiFactorial out{1, false};
  std::vector<Graph> level;
  if (unbounded_multiplicity(spec, Graph(1))) level.push_back(Graph(1));
  for (int size = 2; size <= options.semifactorial_cap && !level.empty(); ++size) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const auto& c : level) {
      for (VertexSet nb = 1; nb < bit(size - 1); ++nb) {
        Graph g(size);
        for (auto [a, b] : c.edges()) g.add_edge(a, b);
        for (int v = 0; v < size - 1; ++v) {
          if ((nb >> v) & 1U) g.add_edge(v, size - 1);
        }
        if (g.max_degree() >= degree_limit) continue;
        if (!seen.insert(canonical_code(g)).second) continue;
        if (unbounded_multiplicity(spec, g)) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
    if (!level.empty()) out.k = size;
  }
  out.lower_bound_only = !level.empty() && out.k == options.semifactorial_cap;
  return out;
}

PolynomialGrowth polynomial_of(const ClassSpec& spec, const ClassifyOptions& options) {
  if (chain(spec) != Tag::kPolynomial) throw ClassifyError("class is not polynomial");

  // Witnesses: M = k edges + l isolated, S = star on s vertices + r isolated.
  // Patterns avoid k disjoint edges and have degree below s - 1, so a maximal
  // matching's 2(k-1) ends and their other neighbours cover them.
  int m = 0;
  for (const auto& e : spec.excluded()) m = std::max(m, isolated_count(e.graph));
  std::tuple<int, int> best{std::numeric_limits<int>::max(), 0};  // (pattern bound, N)
  for (const auto& a : spec.excluded()) {
    if (!is_matching_graph(a.graph) || a.graph.size() == 0) continue;
    const int k = a.graph.size();
    const int l = isolated_count(a.graph);
    for (const auto& b : spec.excluded()) {
      if (!is_star_plus_isolated(b.graph) || b.graph.size() == 0) continue;
      const int r = isolated_count(b.graph);
      const int s = b.graph.order() - r;
      const int bound = 2 * (k - 1) * (s - 2);
      const int n0 = std::max({s + r, 2 * k + l, 2 * k * s + m});
      best = std::min(best, std::tuple{bound, n0});
    }
  }
  const auto [bound, threshold] = best;
  const int cap = std::min(options.pattern_cap, kCountCap);
  if (bound > cap) {
    throw CapExceeded("patterns may have " + std::to_string(bound) +
                      " vertices, over the pattern cap of " + std::to_string(cap));
  }

  std::vector<ExcludedMinor> stripped;
  for (const auto& e : spec.excluded()) {
    stripped.push_back({strip_isolated(e.graph), e.label});
  }
  ClassSpec patterns(std::move(stripped));

  PolynomialGrowth out;
  out.threshold = threshold;
  for (int j = 0; j <= bound; ++j) {
    BigInt c = 0;
    enumerate_members(patterns, j, [&](const Graph& g) {
      if (isolated_count(g) == 0) ++c;
    });
    out.coefficients.push_back(c);
  }
  while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();

  if (options.empirical_n_max >= 0) {
    out.checked_up_to = options.empirical_n_max;
    for (int n = options.empirical_n_max; n >= 0; --n) {
      if (count_members(spec, n) != out(n)) break;
      out.empirical_threshold = n;
    }
  }
  return out;
}

GrowthCategory classify(const ClassSpec& spec, const ClassifyOptions& options) {
  switch (chain(spec)) {
    case Tag::kFactorial:
      return Factorial{};
    case Tag::kAlmostFactorial:
      return AlmostFactorial{};
    case Tag::kSemiFactorial:
      return semifactorial_k(spec, options);
    case Tag::kExponential:
      return Exponential{};
    case Tag::kPolynomial:
      return polynomial_of(spec, options);
    case Tag::kConstant:
      return constant_of(spec);
  }
  throw ClassifyError("unreachable");
}

bool exists_growth_constant(const ClassSpec& spec) {
  const auto& ex = spec.excluded();
  return std::all_of(ex.begin(), ex.end(),
                     [](const ExcludedMinor& e) { return is_two_connected(e.graph); });
}

bool gamma_one_test(const ClassSpec& spec) {
  return none_is(spec, is_path_forest) &&
         !none_is(spec, is_caterpillar_forest) &&
         !none_is(spec, is_apex_path_forest);
}

ClassSpec minimize_obstructions(const ClassSpec& spec) {
  const auto& ex = spec.excluded();
  std::vector<ExcludedMinor> kept;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ex.size() && !redundant; ++j) {
      if (j == i || !is_minor(ex[j].graph, ex[i].graph)) continue;
      // Mutual minors are isomorphic; the first copy stays.
      redundant = j < i || !is_minor(ex[i].graph, ex[j].graph);
    }
    if (!redundant) kept.push_back(ex[i]);
  }
  return ClassSpec(std::move(kept));
}

}  // namespace minorgrowth
