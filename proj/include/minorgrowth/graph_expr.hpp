#pragma once

#include "minorgrowth/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace minorgrowth {

// Graph DSL:
//   expr     := term ("+" term)*
//   term     := NAME ":" INT ("," INT)? | "edges" "(" INT ";" EDGELIST ")"
//   EDGELIST := INT "-" INT ("," INT "-" INT)*
// Whitespace is ignored. Names: path cycle complete star biclique matching iso comb fan.

struct NamedTerm {
  std::string name;
  std::vector<int> params;
  bool operator==(const NamedTerm&) const = default;
};

struct EdgeListTerm {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, as written
  bool operator==(const EdgeListTerm&) const = default;
};

using GraphTerm = std::variant<NamedTerm, EdgeListTerm>;

/// Disjoint union of its terms, left to right.
struct GraphExpr {
  std::vector<GraphTerm> terms;
  bool operator==(const GraphExpr&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

GraphExpr parse_graph_expr(std::string_view text);

/// Splits a comma-separated list of expressions. A top-level comma followed by
/// a name starts a new expression; commas followed by digits belong to the
/// current term (as in "biclique:2,3").
std::vector<GraphExpr> parse_expr_list(std::string_view text);

/// Canonical whitespace-free rendering; parse_graph_expr(print(e)) == e.
std::string print(const GraphExpr& expr);

Graph evaluate(const GraphExpr& expr);
Graph evaluate(const GraphTerm& term);

/// Convenience: parse and evaluate.
Graph parse_graph(std::string_view text);

}  // namespace minorgrowth
