#include "minorgrowth/acceptance.hpp"
#include "minorgrowth/minor.hpp"

#include <gtest/gtest.h>

namespace minorgrowth {
namespace {

TEST(Acceptance, InvertedMinorTestIsCaught) {
  AcceptanceOptions broken;
  broken.level = Level::kFast;
  broken.minor_test = [](const Graph& h, const Graph& g) { return !is_minor(h, g); };
  CriterionResult r = run_criterion(8, broken);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("checks failed"), std::string::npos);
  EXPECT_EQ(format_line(r).rfind("FAIL  8", 0), 0U);
}

TEST(Acceptance, CheapCriteriaPass) {
  for (int id : {1, 2, 4, 9}) {
    CriterionResult r = run_criterion(id);
    EXPECT_TRUE(r.passed) << format_line(r);
    EXPECT_FALSE(r.diagnostic);
  }
}

TEST(Acceptance, Levels) {
  EXPECT_EQ(parse_level("fast"), Level::kFast);
  EXPECT_EQ(to_string(parse_level("full")), "full");
  EXPECT_THROW(parse_level("slow"), std::invalid_argument);
  EXPECT_EQ(brute_limit(Level::kFast), 6);
  EXPECT_EQ(brute_limit(Level::kFull), 7);
  EXPECT_THROW(run_criterion(11), std::out_of_range);
}

}  // namespace
}  // namespace minorgrowth
