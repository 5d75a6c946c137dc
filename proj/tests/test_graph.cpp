#include "minorgrowth/graph.hpp"
#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/minor.hpp"
#include "minorgrowth/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace minorgrowth {
namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  return out;
}

bool same_graph_up_to_iso(const Graph& a, const Graph& b) {
  return canonical_code(a) == canonical_code(b);
}

TEST(MakeGraph, EmptyAndTriangle) {
  Graph empty = make_graph(0, {});
  EXPECT_EQ(empty.order(), 0);
  EXPECT_EQ(empty.size(), 0);

  Graph k3 = make_graph(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(k3, parse_graph("complete:3"));
}

TEST(MakeGraph, MatchingDegreesAndDuplicates) {
  Graph m = make_graph(4, {{1, 2}, {3, 4}, {2, 1}});
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(degree_sequence(m), (std::vector<int>{1, 1, 1, 1}));
}

TEST(MakeGraph, Errors) {
  EXPECT_THROW(make_graph(3, {{1, 4}}), GraphError);
  EXPECT_THROW(make_graph(3, {{0, 1}}), GraphError);
  EXPECT_THROW(make_graph(3, {{2, 2}}), GraphError);
  EXPECT_THROW(make_graph(65, {}), GraphError);
}

TEST(Generate, Families) {
  Graph star = parse_graph("star:3");
  EXPECT_EQ(star.order(), 4);
  EXPECT_EQ(star.size(), 3);

  Graph comb = parse_graph("comb:3");
  EXPECT_EQ(comb.order(), 6);
  EXPECT_EQ(comb.size(), 5);
  EXPECT_EQ(degree_sequence(comb), (std::vector<int>{2, 3, 2, 1, 1, 1}));

  Graph fan = parse_graph("fan:4");
  EXPECT_EQ(fan.order(), 5);
  EXPECT_EQ(fan.size(), 7);
  EXPECT_EQ(fan.degree(4), 4);

  EXPECT_EQ(parse_graph("path:2+path:2"), parse_graph("matching:2"));
  EXPECT_EQ(parse_graph("edges(4;1-2,3-4)"), parse_graph("matching:2"));
  EXPECT_EQ(parse_graph("biclique:2,3").size(), 6);
  EXPECT_EQ(parse_graph("iso:3").order(), 3);
  EXPECT_EQ(parse_graph("cycle:5").size(), 5);
}

TEST(Generate, Errors) {
  EXPECT_THROW(parse_graph("blob:3"), GraphError);
  EXPECT_THROW(parse_graph("path:65"), GraphError);
  EXPECT_THROW(parse_graph("path:40+path:40"), GraphError);
  EXPECT_THROW(parse_graph("biclique:2"), GraphError);
  EXPECT_THROW(parse_graph("cycle:2"), GraphError);
  EXPECT_THROW(parse_graph("path:"), ParseError);
  EXPECT_THROW(parse_graph("path:3 +"), ParseError);
}

TEST(Dsl, ParseErrorCarriesPosition) {
  try {
    parse_graph_expr("path:3 + ?");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9U);
  }
}

TEST(Dsl, PrintIsCanonicalFixpoint) {
  const char* inputs[] = {" path : 3 + iso:2", "biclique:2, 3", "edges( 4 ; 1-2 , 3 -4)",
                          "matching:2+star:3+comb:2"};
  for (const char* text : inputs) {
    GraphExpr e = parse_graph_expr(text);
    std::string printed = print(e);
    EXPECT_EQ(parse_graph_expr(printed), e) << text;
    EXPECT_EQ(print(parse_graph_expr(printed)), printed);
    EXPECT_EQ(printed.find(' '), std::string::npos);
  }
}

TEST(Dsl, ExpressionListsSplitOnNames) {
  auto list = parse_expr_list("matching:2, star:3");
  ASSERT_EQ(list.size(), 2U);
  EXPECT_EQ(print(list[1]), "star:3");

  auto mixed = parse_expr_list("biclique:2,3,complete:4,edges(3;1-2,2-3)");
  ASSERT_EQ(mixed.size(), 3U);
  EXPECT_EQ(print(mixed[0]), "biclique:2,3");
  EXPECT_EQ(print(mixed[2]), "edges(3;1-2,2-3)");

  EXPECT_THROW(parse_expr_list(""), ParseError);
  EXPECT_THROW(parse_expr_list("path:3,"), ParseError);
}

TEST(DeleteVertex, Examples) {
  EXPECT_EQ(delete_vertex(parse_graph("complete:3"), 0), parse_graph("complete:2"));
  EXPECT_EQ(delete_vertex(parse_graph("star:3"), 0), parse_graph("iso:3"));
  EXPECT_EQ(delete_vertex(parse_graph("path:5"), 2), parse_graph("path:2+path:2"));
  EXPECT_THROW(delete_vertex(parse_graph("path:2"), 2), GraphError);
}

TEST(ContractEdge, Examples) {
  EXPECT_EQ(contract_edge(parse_graph("complete:2"), 0, 1), parse_graph("iso:1"));
  EXPECT_EQ(contract_edge(parse_graph("complete:3"), 1, 2), parse_graph("complete:2"));
  Graph comb2 = parse_graph("comb:2");
  EXPECT_TRUE(same_graph_up_to_iso(contract_edge(comb2, 0, 1), parse_graph("star:2")));
  EXPECT_THROW(contract_edge(parse_graph("path:3"), 0, 2), GraphError);
}

TEST(Components, Examples) {
  auto one = components(parse_graph("path:3"));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0], parse_graph("path:3"));

  auto two = components(parse_graph("matching:2"));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0], parse_graph("complete:2"));
  EXPECT_EQ(two[1], parse_graph("complete:2"));

  EXPECT_TRUE(components(Graph(0)).empty());
}

TEST(TwoConnected, Examples) {
  EXPECT_TRUE(is_two_connected(parse_graph("complete:3")));
  EXPECT_FALSE(is_two_connected(parse_graph("path:3")));
  EXPECT_TRUE(is_two_connected(parse_graph("cycle:5")));
  EXPECT_FALSE(is_two_connected(parse_graph("complete:1")));
  EXPECT_FALSE(is_two_connected(parse_graph("complete:2")));
  EXPECT_FALSE(is_two_connected(parse_graph("cycle:3+cycle:3")));
}

TEST(TwoConnected, AgreesWithVertexRemovalOracle) {
  // cycle:5 has no cut vertex: each single deletion leaves path:4.
  Graph c5 = parse_graph("cycle:5");
  for (int v = 0; v < 5; ++v) {
    EXPECT_TRUE(same_graph_up_to_iso(delete_vertex(c5, v), parse_graph("path:4")));
  }
}

TEST(DfsForest, Examples) {
  auto path = dfs_forest(parse_graph("path:5"));
  EXPECT_EQ(path.height, 4);
  EXPECT_EQ(path.roots.size(), 1U);

  auto matching = dfs_forest(parse_graph("matching:3"));
  EXPECT_EQ(matching.height, 1);
  EXPECT_EQ(matching.roots.size(), 3U);

  EXPECT_EQ(dfs_forest(parse_graph("complete:4")).height, 3);
}

TEST(DfsForest, RejectsNonPermutation) {
  Graph g = parse_graph("path:3");
  std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(dfs_forest(g, bad), GraphError);
  std::vector<int> short_order{0, 1};
  EXPECT_THROW(dfs_forest(g, short_order), GraphError);
}

TEST(DfsForest, OrderControlsRootsAndIsDeterministic) {
  Graph g = parse_graph("path:4");
  std::vector<int> order{2, 0, 1, 3};
  auto a = dfs_forest(g, order);
  auto b = dfs_forest(g, order);
  EXPECT_EQ(a.parent, b.parent);
  EXPECT_EQ(a.roots, std::vector<int>{2});
  EXPECT_EQ(a.height, 2);
}

TEST(DfsForest, BackEdgeAndPathMinorProperty) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.7);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = size(rng);
    Graph g = oracle::random_graph(rng, n, density(rng));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto forest = dfs_forest(g, order);

    EXPECT_EQ(forest.roots.size(), component_sets(g).size());
    for (auto [u, v] : g.edges()) {
      EXPECT_TRUE(forest.is_ancestor(u, v) || forest.is_ancestor(v, u));
    }
    EXPECT_TRUE(is_minor(parse_graph("path:" + std::to_string(forest.height + 1)), g));
  }
}

TEST(CanonicalCode, IsomorphismExamples) {
  Graph p = make_graph(3, {{1, 2}, {2, 3}});
  Graph q = make_graph(3, {{2, 1}, {1, 3}});
  EXPECT_EQ(canonical_code(p), canonical_code(q));
  EXPECT_NE(canonical_code(parse_graph("complete:3")), canonical_code(p));
  EXPECT_THROW(canonical_code(Graph(17)), GraphError);
}

TEST(CanonicalCode, ElevenUnlabelledGraphsOnFourVertices) {
  std::set<std::string> codes;
  for (const auto& g : oracle::all_labelled_graphs(4)) codes.insert(canonical_code(g));
  EXPECT_EQ(codes.size(), 11U);
}

TEST(CanonicalCode, UnlabelledCountsUpToSix) {
  // 1, 2, 4, 11, 34, 156 graphs on 1..6 vertices.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(oracle::unlabelled_graphs(n).size(), expected[n]) << n;
  }
}

TEST(CanonicalCode, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(0, 16);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    int n = size(rng);
    Graph g = oracle::random_graph(rng, n, density(rng));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
  }
}

TEST(CanonicalCode, RegularAndEmptyGraphsStayFast) {
  EXPECT_EQ(canonical_code(Graph(16)).size(), 1U + (16 * 15 / 2 + 7) / 8);
  EXPECT_EQ(canonical_code(parse_graph("cycle:8+cycle:8")),
            canonical_code(relabel(parse_graph("cycle:8+cycle:8"),
                                   std::vector<int>{15, 3, 2, 1, 0, 4, 5, 6, 7, 8, 9, 10, 11,
                                                    12, 13, 14})));
  EXPECT_NE(canonical_code(parse_graph("cycle:8+cycle:8")), canonical_code(parse_graph("cycle:16")));
}

TEST(GraphProperties, MinorOperationsShrinkAndStaySimple) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(rng, n, 0.4);
    int v = static_cast<int>(rng() % n);
    Graph d = delete_vertex(g, v);
    EXPECT_EQ(d.order(), n - 1);
    EXPECT_LE(d.size(), g.size());
    for (auto [a, b] : g.edges()) {
      Graph c = contract_edge(g, a, b);
      EXPECT_EQ(c.order(), n - 1);
      EXPECT_LT(c.size(), g.size());
      for (int x = 0; x < c.order(); ++x) EXPECT_FALSE(c.adjacent(x, x));
    }
  }
}

TEST(GraphProperties, ComponentsPartitionAndUnionRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 13);
    Graph g = oracle::random_graph(rng, n, 0.15);
    VertexSet seen = 0;
    int total = 0;
    for (VertexSet c : component_sets(g)) {
      EXPECT_EQ(seen & c, 0U);
      seen |= c;
      total += popcount(c);
    }
    EXPECT_EQ(seen, g.vertices());
    EXPECT_EQ(total, n);

    Graph rebuilt;
    for (const auto& comp : components(g)) rebuilt = disjoint_union(rebuilt, comp);
    EXPECT_EQ(canonical_code(rebuilt), canonical_code(g));
  }
}

}  // namespace
}  // namespace minorgrowth
