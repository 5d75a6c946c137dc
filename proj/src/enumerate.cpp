#include "minorgrowth/enumerate.hpp"

#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/series.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace minorgrowth {

MembershipTest::MembershipTest(const ClassSpec& spec) : spec_(&spec) {}

bool MembershipTest::operator()(const Graph& g) {
  bool could_contain = false;
  for (const auto& e : spec_->excluded()) {
    if (e.graph.order() <= g.order() && e.graph.size() <= g.size()) {
      could_contain = true;
      break;
    }
  }
  if (!could_contain) return true;
  if (g.order() > kCanonicalLimit) return spec_->contains(g);
  std::string code = canonical_code(g);
  if (auto it = cache_.find(code); it != cache_.end()) return it->second;
  bool member = spec_->contains(g);
  cache_.emplace(std::move(code), member);
  return member;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList all_edges(int n) {
  EdgeList out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order");
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " is over the cap of " +
                      std::to_string(cap));
  }
}

// Walks the members whose edges beyond the current graph all have index in
// [from, limit), with g itself already known to be a member.
template <typename Visit>
void descend(Graph& g, const EdgeList& edges, std::size_t from, std::size_t limit,
             MembershipTest& member, Visit&& visit) {
  visit(g);
  for (std::size_t i = from; i < limit; ++i) {
    auto [u, v] = edges[i];
    g.add_edge(u, v);
    if (member(g)) descend(g, edges, i + 1, limit, member, visit);
    g.remove_edge(u, v);
  }
}

}  // namespace

BigInt count_members(const ClassSpec& spec, int n, const CountOptions& options) {
  check_cap(n, kCountCap, "count_members");
  MembershipTest member(spec);
  Graph root(n);
  if (!member(root)) return 0;
  const EdgeList edges = all_edges(n);
  const int workers = std::max(options.workers, 1);
  std::size_t depth = options.split_depth >= 0 ? static_cast<std::size_t>(options.split_depth)
                                               : (workers > 1 ? 8U : 0U);
  depth = std::min(depth, edges.size());

  // Members using only the first `depth` edges; each roots an independent subtree.
  std::vector<Graph> prefixes;
  descend(root, edges, 0, depth, member, [&](const Graph& g) { prefixes.push_back(g); });

  std::vector<BigInt> partial(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&](MembershipTest& test) {
    for (std::size_t j = next++; j < prefixes.size(); j = next++) {
      Graph g = prefixes[j];
      unsigned long long count = 0;
      descend(g, edges, depth, edges.size(), test, [&](const Graph&) { ++count; });
      partial[j] = count;
    }
  };
  if (workers == 1 || prefixes.size() < 2) {
    work(member);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        MembershipTest local(spec);
        work(local);
      });
    }
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

void enumerate_members(const ClassSpec& spec, int n,
                       const std::function<void(const Graph&)>& visit) {
  check_cap(n, kCountCap, "enumerate_members");
  MembershipTest member(spec);
  Graph root(n);
  if (!member(root)) return;
  const EdgeList edges = all_edges(n);
  descend(root, edges, 0, edges.size(), member, visit);
}

BigInt apex_count(const ClassSpec& spec, int n) {
  check_cap(n, kApexCap, "apex_count");
  MembershipTest member(spec);
  if (n == 0) return member(Graph(0)) ? 1 : 0;
  std::vector<Graph> base;
  enumerate_members(spec, n - 1, [&](const Graph& g) { base.push_back(g); });

  // G is counted from (v, G - v) where v is the smallest vertex whose deletion
  // leaves a member.
  BigInt total = 0;
  for (int v = 0; v < n; ++v) {
    for (const auto& h : base) {
      for (VertexSet nb = 0; nb < bit(n - 1); ++nb) {
        Graph g(n);
        auto lift = [v](int i) { return i < v ? i : i + 1; };
        for (auto [a, b] : h.edges()) g.add_edge(lift(a), lift(b));
        for (int i = 0; i < n - 1; ++i) {
          if ((nb >> i) & 1U) g.add_edge(v, lift(i));
        }
        bool smaller_apex = false;
        for (int u = 0; u < v && !smaller_apex; ++u) smaller_apex = member(delete_vertex(g, u));
        if (!smaller_apex) ++total;
      }
    }
  }
  return total;
}

BigInt bell(int n) {
  if (n < 0) throw std::invalid_argument("bell: negative n");
  // Bell triangle: each row starts with the last entry of the previous one.
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

BigInt matchings_count(int n) {
  if (n < 0) throw std::invalid_argument("matchings_count: negative n");
  BigInt prev = 1, cur = 1;  // I(0), I(1)
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    BigInt next = cur + BigInt(k - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

BigInt series_count(Series (*make)(int), int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  return make(std::max(n, 1)).egf_count(n);
}

}  // namespace

BigInt path_forest_count(int n) { return series_count(path_forest_series, n); }
BigInt star_forest_count(int n) { return series_count(star_forest_series, n); }
BigInt forest_count(int n) { return series_count(forest_series, n); }

BigInt star_class_count(int n) {
  if (n < 0) throw std::invalid_argument("star_class_count: negative n");
  if (n == 0) return 1;
  return 1 + binomial(n, 2) + BigInt(n) * pow2(n - 1) - BigInt(n) * n;
}

std::optional<std::function<BigInt(int)>> known_formula(const ClassSpec& spec) {
  auto codes = [](const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) {
      if (g.order() > kCanonicalLimit) return std::set<std::string>{};
      out.insert(canonical_code(g));
    }
    return out;
  };
  const auto target = codes(spec.graphs());
  if (target.empty()) return std::nullopt;
  auto of = [&](const char* list) { return codes(ClassSpec::parse(list).graphs()); };

  if (target == of("path:3")) return std::function<BigInt(int)>(matchings_count);
  if (target == of("complete:3")) return std::function<BigInt(int)>(forest_count);
  if (target == of("complete:3,star:3")) return std::function<BigInt(int)>(path_forest_count);
  if (target == of("path:4,complete:3")) return std::function<BigInt(int)>(star_forest_count);
  if (target == of("complete:2")) return std::function<BigInt(int)>([](int) { return BigInt(1); });
  if (target == of("iso:1")) {
    return std::function<BigInt(int)>([](int n) { return BigInt(n == 0 ? 1 : 0); });
  }
  return std::nullopt;
}

std::string to_string(Provenance p) { return p == Provenance::kBrute ? "brute" : "formula"; }

Provenance parse_provenance(const std::string& text) {
  if (text == "brute") return Provenance::kBrute;
  if (text == "formula") return Provenance::kFormula;
  throw std::invalid_argument("unknown provenance '" + text + "'");
}

void CountTable::record(int n, const BigInt& count, Provenance p) {
  Entry& e = entries_[n];
  const auto& other = p == Provenance::kBrute ? e.formula : e.brute;
  if (other && *other != count) {
    throw CountMismatch("count mismatch at n = " + std::to_string(n) + ": " + to_decimal(*other) +
                        " vs " + to_decimal(count));
  }
  (p == Provenance::kBrute ? e.brute : e.formula) = count;
}

CountTable count_table(const ClassSpec& spec, int lo, int hi, const CountOptions& options) {
  CountTable table(spec.key());
  auto formula = known_formula(spec);
  for (int n = lo; n <= hi; ++n) {
    table.record(n, count_members(spec, n, options), Provenance::kBrute);
    if (formula) table.record(n, (*formula)(n), Provenance::kFormula);
  }
  return table;
}

}  // namespace minorgrowth
