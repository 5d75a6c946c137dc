#include "minorgrowth/graph_expr.hpp"

#include <cctype>
#include <limits>

namespace minorgrowth {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr expr() {
    GraphExpr out;
    out.terms.push_back(term());
    while (accept('+')) out.terms.push_back(term());
    return out;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  std::size_t position() {
    skip();
    return pos_;
  }

  bool at_name() {
    skip();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<int>(value);
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("expected generator name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  GraphTerm term() {
    std::string id = name();
    if (id == "edges") {
      EdgeListTerm out;
      expect('(');
      out.n = integer();
      expect(';');
      do {
        int a = integer();
        expect('-');
        int b = integer();
        out.edges.emplace_back(a, b);
      } while (accept(','));
      expect(')');
      return out;
    }
    NamedTerm out{id, {}};
    expect(':');
    out.params.push_back(integer());
    // A second parameter is a comma followed by a digit; a comma followed by a
    // name is left for the list splitter.
    std::size_t save = pos_;
    if (accept(',')) {
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        out.params.push_back(integer());
      } else {
        pos_ = save;
      }
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_params(const NamedTerm& t, std::size_t expected) {
  if (t.params.size() != expected) {
    throw GraphError("generator '" + t.name + "' takes " + std::to_string(expected) +
                     " parameter(s)");
  }
}

void check_size(long long n) {
  if (n > Graph::kMaxVertices) {
    throw GraphError("graph size " + std::to_string(n) + " exceeds 64 vertices");
  }
}

Graph generate(const NamedTerm& t) {
  const std::string& name = t.name;
  if (name == "biclique") {
    check_params(t, 2);
    int a = t.params[0];
    int b = t.params[1];
    check_size(static_cast<long long>(a) + b);
    Graph g(a + b);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
  }
  check_params(t, 1);
  const int k = t.params[0];
  if (name == "path") {
    check_size(k);
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "cycle") {
    if (k < 3) throw GraphError("cycle needs at least 3 vertices");
    check_size(k);
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
  }
  if (name == "complete") {
    check_size(k);
    Graph g(k);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    }
    return g;
  }
  if (name == "star") {
    check_size(static_cast<long long>(k) + 1);
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
  }
  if (name == "matching") {
    check_size(2LL * k);
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
  }
  if (name == "iso") {
    check_size(k);
    return Graph(k);
  }
  if (name == "comb") {
    // spine 1..k, leaf k+i hanging from spine vertex i
    check_size(2LL * k);
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
      if (i + 1 < k) g.add_edge(i, i + 1);
      g.add_edge(i, k + i);
    }
    return g;
  }
  if (name == "fan") {
    // path 1..k plus an apex k+1 joined to every path vertex
    check_size(static_cast<long long>(k) + 1);
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) {
      if (i + 1 < k) g.add_edge(i, i + 1);
      g.add_edge(i, k);
    }
    return g;
  }
  throw GraphError("unknown generator '" + name + "'");
}

}  // namespace

GraphExpr parse_graph_expr(std::string_view text) {
  Parser p(text);
  GraphExpr out = p.expr();
  p.finish();
  return out;
}

std::vector<GraphExpr> parse_expr_list(std::string_view text) {
  Parser p(text);
  std::vector<GraphExpr> out;
  if (p.at_end()) throw ParseError("empty expression list", 0);
  out.push_back(p.expr());
  while (p.accept(',')) {
    if (!p.at_name()) throw ParseError("expected graph expression", p.position());
    out.push_back(p.expr());
  }
  p.finish();
  return out;
}

std::string print(const GraphExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    if (i) out += "+";
    if (const auto* named = std::get_if<NamedTerm>(&expr.terms[i])) {
      out += named->name + ":";
      for (std::size_t j = 0; j < named->params.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(named->params[j]);
      }
    } else {
      const auto& list = std::get<EdgeListTerm>(expr.terms[i]);
      out += "edges(" + std::to_string(list.n) + ";";
      for (std::size_t j = 0; j < list.edges.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(list.edges[j].first) + "-" + std::to_string(list.edges[j].second);
      }
      out += ")";
    }
  }
  return out;
}

Graph evaluate(const GraphTerm& term) {
  if (const auto* named = std::get_if<NamedTerm>(&term)) return generate(*named);
  const auto& list = std::get<EdgeListTerm>(term);
  return make_graph(list.n, list.edges);
}

Graph evaluate(const GraphExpr& expr) {
  Graph out;
  for (const auto& term : expr.terms) {
    Graph next = evaluate(term);
    check_size(static_cast<long long>(out.order()) + next.order());
    out = disjoint_union(out, next);
  }
  return out;
}

Graph parse_graph(std::string_view text) { return evaluate(parse_graph_expr(text)); }

}  // namespace minorgrowth
