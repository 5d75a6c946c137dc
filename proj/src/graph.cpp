#include "minorgrowth/graph.hpp"

#include <algorithm>
#include <numeric>

namespace minorgrowth {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..64");
  }
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += popcount(row);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet row : rows_) best = std::max(best, popcount(row));
  return best;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loop edges are not allowed");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexSet rest = rows_[u] & ~first_n(u + 1); rest; rest &= rest - 1) {
      out.emplace_back(u, lowest(rest));
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (keep & bit(v)) index[v] = next++;
  }
  Graph out(next);
  for (int u = 0; u < n_; ++u) {
    if (index[u] < 0) continue;
    for (VertexSet rest = rows_[u] & keep; rest; rest &= rest - 1) {
      out.rows_[index[u]] |= bit(index[lowest(rest)]);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && rows_ == other.rows_;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..64");
  }
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw GraphError("endpoint out of range in edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    g.add_edge(a - 1, b - 1);
  }
  return g;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
  return g.induced(g.vertices() & ~bit(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("not an edge");
  }
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("not an edge");
  }
  if (u > v) std::swap(u, v);
  Graph merged = g;
  for (VertexSet rest = g.neighbors(v) & ~bit(u); rest; rest &= rest - 1) {
    merged.add_edge(u, lowest(rest));
  }
  return delete_vertex(merged, v);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [x, y] : a.edges()) out.add_edge(x, y);
  for (auto [x, y] : b.edges()) out.add_edge(a.order() + x, a.order() + y);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  Graph out(g.order());
  for (auto [x, y] : g.edges()) out.add_edge(perm[x], perm[y]);
  return out;
}

std::vector<VertexSet> component_sets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (VertexSet comp : component_sets(g)) out.push_back(g.induced(comp));
  return out;
}

bool is_connected(const Graph& g) { return component_sets(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(component_sets(g).size());
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.neighbors(v) == 0 ? 1 : 0;
  return count;
}

Graph strip_isolated(const Graph& g) {
  VertexSet keep = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v)) keep |= bit(v);
  }
  return g.induced(keep);
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_connected(delete_vertex(g, v))) return false;
  }
  return true;
}

bool DfsForest::is_ancestor(int ancestor, int v) const {
  for (int cur = v; cur >= 0; cur = parent[cur]) {
    if (cur == ancestor) return true;
  }
  return false;
}

DfsForest dfs_forest(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw GraphError("visiting order is not a permutation");
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || rank[v] >= 0) throw GraphError("visiting order is not a permutation");
    rank[v] = i;
  }

  DfsForest forest;
  forest.parent.assign(static_cast<std::size_t>(n), -1);
  forest.depth.assign(static_cast<std::size_t>(n), 0);
  VertexSet visited = 0;
  std::vector<int> stack;
  for (int root : order) {
    if (visited & bit(root)) continue;
    forest.roots.push_back(root);
    visited |= bit(root);
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      int next = -1;
      for (VertexSet cand = g.neighbors(u) & ~visited; cand; cand &= cand - 1) {
        int w = lowest(cand);
        if (next < 0 || rank[w] < rank[next]) next = w;
      }
      if (next < 0) {
        stack.pop_back();
        continue;
      }
      visited |= bit(next);
      forest.parent[next] = u;
      forest.depth[next] = forest.depth[u] + 1;
      forest.height = std::max(forest.height, forest.depth[next]);
      stack.push_back(next);
    }
  }
  return forest;
}

DfsForest dfs_forest(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  return dfs_forest(g, order);
}

namespace {

using Cells = std::vector<std::vector<int>>;

// Colour refinement until stable. Cells keep their relative order and each
// split orders the pieces by neighbour-count signature, so the result is
// isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(cells.size(), 0);
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) ++counts[cell_of[lowest(nb)]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<int> piece{keyed[0].second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(piece));
          piece.clear();
        }
        piece.push_back(keyed[i].second);
      }
      next.push_back(std::move(piece));
    }
    bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::string encode(const Graph& g, const Cells& discrete) {
  const int n = g.order();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) at[i] = discrete[i][0];
  std::string code(1, static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0));
      if (++filled == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) code.push_back(static_cast<char>(byte << (8 - filled)));
  return code;
}

void search(const Graph& g, Cells cells, std::string& best) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::string code = encode(g, cells);
    if (best.empty() || code > best) best = std::move(code);
    return;
  }
  const std::size_t at = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> cell = *target;
  // Swapping two twins fixes everything else, so only one twin per class needs a branch.
  std::vector<int> reps;
  for (int v : cell) {
    bool twin_of_rep = std::any_of(reps.begin(), reps.end(), [&](int r) {
      return (g.neighbors(v) & ~bit(r)) == (g.neighbors(r) & ~bit(v));
    });
    if (!twin_of_rep) reps.push_back(v);
  }
  for (int v : reps) {
    Cells branch;
    branch.reserve(cells.size() + 1);
    branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    branch.push_back({v});
    std::vector<int> rest;
    for (int w : cell) {
      if (w != v) rest.push_back(w);
    }
    branch.push_back(std::move(rest));
    branch.insert(branch.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
    search(g, std::move(branch), best);
  }
}

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.order() > kCanonicalLimit) {
    throw GraphError("canonical_code supports at most " + std::to_string(kCanonicalLimit) +
                     " vertices");
  }
  if (g.order() == 0) return std::string(1, '\0');
  Cells cells(1);
  for (int v = 0; v < g.order(); ++v) cells[0].push_back(v);
  std::string best;
  search(g, std::move(cells), best);
  return best;
}

std::string to_edge_string(const Graph& g) {
  if (g.size() == 0) return "iso:" + std::to_string(g.order());
  std::string out = "edges(" + std::to_string(g.order()) + ";";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out + ")";
}

}  // namespace minorgrowth
