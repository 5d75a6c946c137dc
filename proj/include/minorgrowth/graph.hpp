#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorgrowth {

using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple labelled graph on at most 64 vertices.
///
/// Vertices are stored 0-based; vertex i carries the label i+1 wherever labels
/// are shown to a user (edge lists, the DSL, reports). Adjacency is one bit row
/// per vertex and is kept symmetric and loop-free by every mutator.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;  // edge count

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  int max_degree() const;
  VertexSet vertices() const { return first_n(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges as 0-based pairs (u < v), in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `keep`, relabelled preserving the vertex order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Builds a graph from 1-based labelled edges; duplicates collapse.
Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// Merges v into u; the merged vertex sits at position min(u, v).
Graph contract_edge(const Graph& g, int u, int v);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Applies a permutation: vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<VertexSet> component_sets(const Graph& g);
std::vector<Graph> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
int isolated_count(const Graph& g);
Graph strip_isolated(const Graph& g);

/// K_1 and K_2 are not 2-connected.
bool is_two_connected(const Graph& g);

struct DfsForest {
  std::vector<int> parent;  // -1 for roots
  std::vector<int> roots;
  std::vector<int> depth;
  int height = 0;

  bool is_ancestor(int ancestor, int v) const;
};

/// Depth-first spanning forest. `order` is a permutation of the vertices: roots
/// are taken in that order and neighbours are explored by the same priority.
DfsForest dfs_forest(const Graph& g, std::span<const int> order);
DfsForest dfs_forest(const Graph& g);

/// Isomorphism-invariant byte string: equal codes iff isomorphic graphs.
inline constexpr int kCanonicalLimit = 16;
std::string canonical_code(const Graph& g);

/// Edge list rendering with 1-based labels: "edges(4;1-2,3-4)".
std::string to_edge_string(const Graph& g);

}  // namespace minorgrowth
