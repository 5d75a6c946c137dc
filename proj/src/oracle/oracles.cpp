#include "minorgrowth/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <functional>
#include <numeric>

namespace minorgrowth::oracle {

std::set<std::string> minor_closure(const Graph& g) {
  std::set<std::string> seen;
  std::deque<Graph> queue;
  auto push = [&](const Graph& x) {
    if (seen.insert(canonical_code(x)).second) queue.push_back(x);
  };
  push(g);
  while (!queue.empty()) {
    Graph cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < cur.order(); ++v) push(delete_vertex(cur, v));
    for (auto [u, v] : cur.edges()) {
      push(delete_edge(cur, u, v));
      push(contract_edge(cur, u, v));
    }
  }
  return seen;
}

bool is_minor_by_closure(const Graph& h, const Graph& g) {
  static thread_local std::map<std::string, std::set<std::string>> cache;
  std::string key = canonical_code(g);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, minor_closure(g)).first;
  return it->second.count(canonical_code(h)) > 0;
}

std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> unlabelled_graphs(int n) {
  std::map<std::string, Graph> reps;
  for (auto& g : all_labelled_graphs(n)) reps.emplace(canonical_code(g), g);
  std::vector<Graph> out;
  for (auto& [code, g] : reps) out.push_back(g);
  return out;
}

namespace {

bool avoids(const std::vector<Graph>& excluded, const Graph& g) {
  return std::none_of(excluded.begin(), excluded.end(),
                      [&](const Graph& h) { return is_minor_by_closure(h, g); });
}

}  // namespace

BigInt count_by_exhaustion(const std::vector<Graph>& excluded, int n) {
  BigInt count = 0;
  for (const auto& g : all_labelled_graphs(n)) {
    if (avoids(excluded, g)) ++count;
  }
  return count;
}

BigInt apex_count_by_exhaustion(const std::vector<Graph>& excluded, int n) {
  if (n == 0) return avoids(excluded, Graph(0)) ? 1 : 0;
  BigInt count = 0;
  for (const auto& g : all_labelled_graphs(n)) {
    for (int v = 0; v < n; ++v) {
      if (avoids(excluded, delete_vertex(g, v))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

BigInt bell_triangle(int n) {
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt involutions_by_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  BigInt count = 0;
  do {
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) inv = p[p[i]] == i;
    if (inv) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

BigInt star_sequences(int n) {
  // Assign each vertex a block index and a centre flag; keep assignments whose
  // blocks are exactly 0..b-1, each with one centre.
  BigInt count = 0;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int blocks = n == 0 ? 0 : *std::max_element(block.begin(), block.end()) + 1;
      std::vector<int> size(static_cast<std::size_t>(blocks), 0);
      for (int b : block) ++size[b];
      BigInt ways = 1;
      for (int s : size) {
        if (s == 0) return;
        ways *= s;
      }
      count += ways;
      return;
    }
    for (int b = 0; b < n; ++b) {
      block[i] = b;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace minorgrowth::oracle
