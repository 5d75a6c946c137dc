#include "minorgrowth/enumerate.hpp"
#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/oracles.hpp"

#include <gtest/gtest.h>

namespace minorgrowth {
namespace {

ClassSpec Ex(const char* list) { return ClassSpec::parse(list); }

TEST(ClassSpec, ParseAndKey) {
  ClassSpec a = Ex("star:3, matching:2");
  ClassSpec b = Ex("matching:2,star:3");
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a.key(), b.key());
  EXPECT_EQ(a.key(), "matching:2,star:3");
  EXPECT_TRUE(a.contains(parse_graph("complete:3")));
  EXPECT_FALSE(a.contains(parse_graph("path:5")));
  EXPECT_EQ(ClassSpec::parse(std::vector<std::string>{"path:3", "complete:3,iso:2"}).size(), 3U);
}

TEST(CountMembers, Examples) {
  EXPECT_EQ(count_members(Ex("path:3"), 4), 10);
  EXPECT_EQ(count_members(Ex("complete:3"), 4), 38);
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(count_members(Ex("complete:2"), n), 1);
  EXPECT_EQ(count_members(Ex("iso:1"), 0), 1);
  EXPECT_EQ(count_members(Ex("iso:1"), 3), 0);
  EXPECT_THROW(count_members(Ex("complete:3"), kCountCap + 1), CapExceeded);
}

TEST(CountMembers, AgreesWithExhaustionUpToFive) {
  for (const char* list : {"path:3", "complete:3", "matching:2", "path:4,star:3", "cycle:4",
                           "complete:2+iso:1", "matching:2,star:3", "star:3"}) {
    ClassSpec spec = Ex(list);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(count_members(spec, n), oracle::count_by_exhaustion(spec.graphs(), n))
          << list << " n=" << n;
    }
  }
}

TEST(CountMembers, FrozenSequences) {
  // Values produced by exhaustion over all labelled graphs (n <= 6) and the
  // counting series, before the pruned search existed.
  const long long matchings[] = {1, 1, 2, 4, 10, 26, 76, 232};
  const long long forests[] = {1, 1, 2, 7, 38, 291, 2932, 36961};
  const long long paths[] = {1, 1, 2, 7, 34, 206, 1486, 12412};
  const long long stars[] = {1, 1, 2, 7, 26, 111, 562, 3151};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(count_members(Ex("path:3"), n), matchings[n]) << n;
    EXPECT_EQ(count_members(Ex("complete:3"), n), forests[n]) << n;
    EXPECT_EQ(count_members(Ex("complete:3,star:3"), n), paths[n]) << n;
    EXPECT_EQ(count_members(Ex("path:4,complete:3"), n), stars[n]) << n;
  }
}

TEST(CountMembers, FormulasAgreeUpToSeven) {
  for (const char* list : {"path:3", "complete:3", "complete:3,star:3", "path:4,complete:3"}) {
    ClassSpec spec = Ex(list);
    auto formula = known_formula(spec);
    ASSERT_TRUE(formula) << list;
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(count_members(spec, n), (*formula)(n)) << list << n;
  }
  EXPECT_FALSE(known_formula(Ex("matching:2")));
  EXPECT_TRUE(known_formula(Ex("star:3,complete:3")));
}

TEST(CountMembers, WorkerSplitsAreDeterministic) {
  for (auto [list, n] : {std::pair{"complete:3", 7}, {"matching:2", 7}, {"complete:4", 6}}) {
    ClassSpec spec = Ex(list);
    BigInt serial = count_members(spec, n);
    for (auto [workers, depth] : {std::pair{1, 5}, {3, 1}, {4, 8}, {8, 15}, {2, 21}}) {
      EXPECT_EQ(count_members(spec, n, {workers, depth}), serial) << list << depth << workers;
    }
  }
}

TEST(CountMembers, DroppingAnExcludedMinorNeverDecreasesCounts) {
  const std::vector<const char*> full = {"path:4", "complete:3", "star:3", "matching:2+iso:1"};
  ClassSpec all = Ex("path:4,complete:3,star:3,matching:2+iso:1");
  for (std::size_t drop = 0; drop < full.size(); ++drop) {
    std::string rest;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (i == drop) continue;
      if (!rest.empty()) rest += ",";
      rest += full[i];
    }
    for (int n = 0; n <= 6; ++n) {
      EXPECT_GE(count_members(Ex(rest.c_str()), n), count_members(all, n)) << rest << n;
    }
  }
}

TEST(EnumerateMembers, VisitsEachMemberOnce) {
  ClassSpec spec = Ex("cycle:4");
  std::set<std::vector<std::pair<int, int>>> seen;
  int visits = 0;
  enumerate_members(spec, 5, [&](const Graph& g) {
    ++visits;
    seen.insert(g.edges());
    EXPECT_TRUE(spec.contains(g));
  });
  EXPECT_EQ(visits, static_cast<int>(seen.size()));
  EXPECT_EQ(BigInt(visits), count_members(spec, 5));
}

TEST(ApexCount, Examples) {
  ClassSpec edgeless = Ex("complete:2");
  EXPECT_EQ(apex_count(edgeless, 3), 7);
  EXPECT_EQ(apex_count(edgeless, 4), 23);
  EXPECT_EQ(apex_count(edgeless, 5), 66);
  EXPECT_EQ(apex_count(edgeless, 0), 1);
  EXPECT_EQ(apex_count(Ex("iso:1"), 0), 1);  // the empty graph avoids K_1
  EXPECT_EQ(apex_count(Ex("iso:1"), 1), 1);
  EXPECT_EQ(apex_count(Ex("iso:1"), 2), 0);
  EXPECT_THROW(apex_count(edgeless, kApexCap + 1), CapExceeded);
}

TEST(ApexCount, AgreesWithExhaustionAndStarClass) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(apex_count(Ex("complete:2"), n), star_class_count(n)) << n;
  for (const char* list : {"path:3", "complete:3", "complete:3,star:3", "matching:2"}) {
    ClassSpec spec = Ex(list);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(apex_count(spec, n), oracle::apex_count_by_exhaustion(spec.graphs(), n))
          << list << n;
    }
  }
}

TEST(ClosedForms, SmallValues) {
  EXPECT_EQ(bell(0), 1);
  EXPECT_EQ(bell(4), 15);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(6), 48);
  const int inv[] = {1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(matchings_count(n), inv[n]);
  const int paths[] = {1, 2, 7, 34};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(path_forest_count(n), paths[n - 1]);
  EXPECT_EQ(star_forest_count(4), 26);
  EXPECT_EQ(star_class_count(4), 23);
  EXPECT_EQ(star_class_count(5), 66);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(bell(n), oracle::bell_triangle(n));
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(matchings_count(n), oracle::involutions_by_permutations(n));
}

TEST(ClosedForms, LowerBoundInequalities) {
  for (int n = 1; n <= 12; ++n) {
    if (n >= 2) EXPECT_GE(path_forest_count(n), factorial(n)) << n;
    EXPECT_GE(star_forest_count(n), bell(n)) << n;
    EXPECT_GE(matchings_count(n), double_factorial(n)) << n;
    EXPECT_GE(star_class_count(n), pow2(n - 1)) << n;
  }
}

TEST(CountTable, RecordsBothRoutes) {
  CountTable t = count_table(Ex("complete:3"), 0, 6);
  EXPECT_EQ(t.key(), "complete:3");
  EXPECT_EQ(t.at(6), 2932);
  ASSERT_TRUE(t.entry(6).formula);
  EXPECT_EQ(t.entry(6).provenance(), Provenance::kBrute);
  EXPECT_EQ(t.at(0), 1);
  EXPECT_THROW(t.record(6, 1, Provenance::kFormula), CountMismatch);
  CountTable u("x");
  u.record(3, 5, Provenance::kFormula);
  EXPECT_EQ(u.entry(3).provenance(), Provenance::kFormula);
  EXPECT_EQ(parse_provenance(to_string(Provenance::kBrute)), Provenance::kBrute);
}

}  // namespace
}  // namespace minorgrowth
