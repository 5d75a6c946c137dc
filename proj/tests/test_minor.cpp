#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/minor.hpp"
#include "minorgrowth/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace minorgrowth {
namespace {

Graph G(const char* text) { return parse_graph(text); }

TEST(FindMinorModel, Examples) {
  EXPECT_FALSE(find_minor_model(G("complete:3"), G("path:10")));

  auto p4 = find_minor_model(G("path:4"), G("complete:4"));
  ASSERT_TRUE(p4);
  EXPECT_TRUE(is_valid_model(G("path:4"), G("complete:4"), *p4));
  for (VertexSet s : p4->branch_sets) EXPECT_EQ(popcount(s), 1);

  auto claw = find_minor_model(G("star:3"), G("comb:3"));
  ASSERT_TRUE(claw);
  EXPECT_TRUE(is_valid_model(G("star:3"), G("comb:3"), *claw));
}

TEST(FindMinorModel, EmptyGraphIsAMinorOfEverything) {
  EXPECT_TRUE(is_minor(Graph(0), Graph(0)));
  EXPECT_TRUE(is_minor(Graph(0), G("complete:4")));
  EXPECT_FALSE(is_minor(Graph(1), Graph(0)));
}

TEST(IsMinor, Examples) {
  EXPECT_FALSE(is_minor(G("matching:2"), G("complete:3")));
  EXPECT_TRUE(is_minor(G("path:3"), G("complete:3")));
  EXPECT_TRUE(is_minor(G("cycle:4"), G("complete:4")));
  EXPECT_TRUE(is_minor(G("complete:4"), G("cycle:4+complete:4")));
  EXPECT_FALSE(is_minor(G("complete:4"), G("biclique:2,3")));
  EXPECT_TRUE(is_minor(G("complete:3"), G("biclique:2,3")));
}

TEST(IsMinor, ContractionIsNeeded) {
  // K_4 is a minor of the 3x3 grid only through contraction.
  Graph grid(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (c < 2) grid.add_edge(3 * r + c, 3 * r + c + 1);
      if (r < 2) grid.add_edge(3 * r + c, 3 * r + c + 3);
    }
  }
  auto model = find_minor_model(G("complete:4"), grid);
  ASSERT_TRUE(model);
  EXPECT_TRUE(is_valid_model(G("complete:4"), grid, *model));
  EXPECT_FALSE(is_minor(G("complete:5"), grid));
}

TEST(IsMinor, PacksComponentsAcrossDisconnectedHosts) {
  EXPECT_TRUE(is_minor(G("complete:3+path:2+iso:2"), G("complete:4+path:3")));
  EXPECT_FALSE(is_minor(G("complete:3+complete:3"), G("complete:4+path:3")));
  EXPECT_TRUE(is_minor(G("path:3+iso:3"), G("path:3+path:2+iso:1")));
  EXPECT_FALSE(is_minor(G("path:3+iso:4"), G("path:3+path:2+iso:1")));
  auto model = find_minor_model(G("matching:2+iso:3"), G("path:4+complete:3"));
  ASSERT_TRUE(model);
  EXPECT_TRUE(is_valid_model(G("matching:2+iso:3"), G("path:4+complete:3"), *model));
}

TEST(Predicates, PathForest) {
  EXPECT_TRUE(is_path_forest(G("matching:3")));
  EXPECT_FALSE(is_path_forest(G("star:3")));
  EXPECT_TRUE(is_path_forest(G("path:4+iso:2")));
  EXPECT_TRUE(is_path_forest(Graph(0)));
  EXPECT_FALSE(is_path_forest(G("cycle:4")));
}

TEST(Predicates, StarForest) {
  EXPECT_TRUE(is_star_forest(G("path:3")));
  EXPECT_FALSE(is_star_forest(G("path:4")));
  EXPECT_TRUE(is_star_forest(G("star:3+complete:2")));
  EXPECT_FALSE(is_star_forest(G("complete:3")));
}

TEST(Predicates, MatchingStarsAndEdges) {
  EXPECT_TRUE(is_matching_graph(G("matching:2")));
  EXPECT_FALSE(is_matching_graph(G("path:3")));
  EXPECT_TRUE(is_matching_graph(G("iso:5")));

  EXPECT_TRUE(is_star_plus_isolated(G("star:4+iso:2")));
  EXPECT_FALSE(is_star_plus_isolated(G("matching:2")));
  EXPECT_TRUE(is_star_plus_isolated(G("iso:3")));

  EXPECT_TRUE(has_at_most_one_edge(G("complete:2+iso:3")));
  EXPECT_FALSE(has_at_most_one_edge(G("path:3")));
  EXPECT_TRUE(has_at_most_one_edge(Graph(0)));
}

TEST(Predicates, Caterpillars) {
  EXPECT_TRUE(is_caterpillar_forest(G("comb:4")));
  // spider: centre 1 with legs 1-2-3, 1-4-5, 1-6-7
  EXPECT_FALSE(is_caterpillar_forest(G("edges(7;1-2,2-3,1-4,4-5,1-6,6-7)")));
  EXPECT_TRUE(is_caterpillar_forest(G("star:5")));
  EXPECT_FALSE(is_caterpillar_forest(G("complete:3")));
}

TEST(Predicates, ApexPathForest) {
  EXPECT_TRUE(is_apex_path_forest(G("fan:5")));
  EXPECT_FALSE(is_apex_path_forest(G("complete:4")));
  EXPECT_TRUE(is_apex_path_forest(G("path:6")));
  EXPECT_TRUE(is_apex_path_forest(G("complete:3")));
}

// The closure predicates must agree with minor containment in a large enough
// member of each family.
TEST(Predicates, CoherentWithMinorContainment) {
  const Graph path13 = G("path:13");
  const Graph stars = G("star:6+star:6+star:6+star:6+star:6+star:6");
  const Graph matchings = G("matching:6+iso:6");
  const Graph one_star = G("star:6+iso:6");
  for (int n = 0; n <= 6; ++n) {
    for (const auto& h : oracle::unlabelled_graphs(n)) {
      EXPECT_EQ(is_path_forest(h), is_minor(h, path13)) << to_edge_string(h);
      EXPECT_EQ(is_star_forest(h), is_minor(h, stars)) << to_edge_string(h);
      EXPECT_EQ(is_matching_graph(h), is_minor(h, matchings)) << to_edge_string(h);
      EXPECT_EQ(is_star_plus_isolated(h), is_minor(h, one_star)) << to_edge_string(h);
    }
  }
}

TEST(Predicates, FamiliesAreMinorClosed) {
  using Pred = bool (*)(const Graph&);
  const Pred preds[] = {is_path_forest, is_star_forest, is_matching_graph, is_star_plus_isolated,
                        is_caterpillar_forest, is_apex_path_forest};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& h : oracle::unlabelled_graphs(n)) {
      for (Pred pred : preds) {
        if (!pred(h)) continue;
        for (int v = 0; v < h.order(); ++v) EXPECT_TRUE(pred(delete_vertex(h, v)));
        for (auto [a, b] : h.edges()) {
          EXPECT_TRUE(pred(delete_edge(h, a, b)));
          EXPECT_TRUE(pred(contract_edge(h, a, b)));
        }
      }
    }
  }
}

TEST(IsMinor, AgreesWithClosureOracleUpToFiveVertices) {
  std::vector<Graph> hosts;
  for (int n = 0; n <= 5; ++n) {
    for (auto& g : oracle::all_labelled_graphs(n)) hosts.push_back(g);
  }
  std::vector<Graph> patterns;
  for (int n = 0; n <= 6; ++n) {
    for (auto& g : oracle::unlabelled_graphs(n)) patterns.push_back(g);
  }
  for (const auto& g : hosts) {
    for (const auto& h : patterns) {
      auto model = find_minor_model(h, g);
      ASSERT_EQ(model.has_value(), oracle::is_minor_by_closure(h, g))
          << to_edge_string(h) << " in " << to_edge_string(g);
      if (model) EXPECT_TRUE(is_valid_model(h, g, *model));
    }
  }
}

TEST(IsMinor, AgreesWithClosureOracleOnRandomSixVertexHosts) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = oracle::random_graph(rng, 6, density(rng));
    Graph h = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), density(rng));
    EXPECT_EQ(is_minor(h, g), oracle::is_minor_by_closure(h, g))
        << to_edge_string(h) << " in " << to_edge_string(g);
  }
}

TEST(IsMinor, TransitiveOnRandomTriples) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 100; ++trial) {
    Graph f = oracle::random_graph(rng, 7, 0.5);
    Graph g = oracle::random_graph(rng, 5, 0.5);
    Graph h = oracle::random_graph(rng, 4, 0.4);
    if (is_minor(h, g) && is_minor(g, f)) {
      ++checked;
      EXPECT_TRUE(is_minor(h, f));
    }
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace minorgrowth
