#include "cli.hpp"

#include "minorgrowth/cache.hpp"
#include "minorgrowth/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace minorgrowth {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Report report_of(std::vector<std::string> args) {
  args.push_back("--json");
  Outcome r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out).get<Report>();
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("minorgrowth_test_" + name);
  std::filesystem::remove(p);
  return p;
}

TEST(Cli, ClassifyExamples) {
  Report forests = report_of({"classify", "--exclude", "complete:3"});
  auto& c = std::get<ClassifyResult>(forests.result);
  EXPECT_EQ(category_name(c.category), "Factorial");
  EXPECT_TRUE(c.growth_constant_exists);

  Report p3 = report_of({"classify", "--exclude", "path:3"});
  EXPECT_EQ(std::get<SemiFactorial>(std::get<ClassifyResult>(p3.result).category).k, 2);

  Report poly = report_of({"classify", "--exclude", "matching:2,star:3"});
  auto coeffs = std::get<PolynomialGrowth>(std::get<ClassifyResult>(poly.result).category).coefficients;
  EXPECT_EQ(coeffs, (std::vector<BigInt>{1, 0, 1, 4}));

  Report split = report_of({"classify", "-x", "star:3", "-x", "matching:2"});
  EXPECT_EQ(split.spec, poly.spec);
  EXPECT_TRUE(same_except_timing(
      split, Report{split.command, split.args, poly.spec, poly.result, poly.version, 0}));
}

TEST(Cli, CountExamples) {
  Report forests = report_of({"count", "--exclude", "complete:3", "--n", "1..6"});
  const auto& t = std::get<CountResult>(forests.result).table;
  const int want[] = {1, 2, 7, 38, 291, 2932};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(t.at(n), want[n - 1]);
  EXPECT_EQ(std::get<CountResult>(report_of({"count", "-x", "path:3", "--n", "5"}).result).table.at(5),
            26);
  EXPECT_EQ(std::get<CountResult>(report_of({"count", "-x", "complete:2", "--n", "9"}).result).table.at(9),
            1);
}

TEST(Cli, Csv) {
  Outcome r = run({"count", "-x", "path:3", "--n", "0..3", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,count,provenance\n0,1,brute\n1,1,brute\n2,2,brute\n3,4,brute\n");
}

TEST(Cli, JsonRoundTripsForEveryCommand) {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "-x", "matching:2+iso:1,star:3"},
      {"classify", "-x", "path:4,star:3"},
      {"classify", "-x", "complete:2+iso:1"},
      {"count", "-x", "cycle:4", "--n", "0..6"},
      {"constants", "--kmax", "6", "--tol", "1e-10"},
      {"growth", "-x", "path:3", "--n", "1..5", "--apex"},
  };
  for (const auto& args : commands) {
    std::vector<std::string> with_json = args;
    with_json.push_back("--json");
    Outcome r = run(with_json);
    ASSERT_EQ(r.code, 0) << r.err;
    json first = json::parse(r.out);
    Report parsed = first.get<Report>();
    EXPECT_EQ(json(parsed), first) << args[0];
    EXPECT_EQ(json(parsed).get<Report>(), parsed) << args[0];
  }
}

TEST(Cli, ConstantsExamples) {
  Report r = report_of({"constants"});
  const auto& c = std::get<ConstantsResult>(r.result);
  EXPECT_LE(c.xi.lo, 1.763222 + 1e-6);
  EXPECT_GE(c.xi.hi, 1.763222);
  EXPECT_LT(c.nu.lo, 2.25);
  EXPECT_GT(c.nu.hi, 2.23);
  EXPECT_LE(c.xi.hi - c.xi.lo, 1e-9);
  EXPECT_EQ(c.gamma[0].lo, 1.0);
  EXPECT_EQ(c.rho.size(), 11U);
}

TEST(Cli, CacheHitsDoNotChangeResults) {
  auto path = temp_file("cache.json");
  std::vector<std::string> args = {"count", "-x", "complete:3", "--n", "0..7", "--cache",
                                   path.string()};
  Report cold = report_of(args);
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_EQ(CountCache::load(path).size(), 8U);
  Report warm = report_of(args);
  EXPECT_TRUE(same_except_timing(cold, warm));
  EXPECT_FALSE(CountCache::load(path).rebuilt());
  std::filesystem::remove(path);
}

TEST(Cli, CorruptCacheIsRebuilt) {
  auto path = temp_file("corrupt.json");
  std::vector<std::string> args = {"count", "-x", "path:3", "--n", "0..6", "--cache",
                                   path.string()};
  Report cold = report_of(args);

  // Change a stored count without fixing the checksum.
  std::string text;
  {
    std::ifstream in(path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto at = text.find("\"76\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 4, "\"77\"");
  {
    std::ofstream out(path);
    out << text;
  }
  EXPECT_TRUE(CountCache::load(path).rebuilt());
  args.push_back("--json");
  Outcome r = run(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("rebuilding"), std::string::npos);
  EXPECT_TRUE(same_except_timing(cold, json::parse(r.out).get<Report>()));
  EXPECT_FALSE(CountCache::load(path).rebuilt());

  { std::ofstream(path) << "{not json"; }
  EXPECT_TRUE(CountCache::load(path).rebuilt());
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "-x", "path:3 + ?"}).code, 2);
  Outcome parse = run({"classify", "-x", "path:3 + ?"});
  EXPECT_NE(parse.err.find("position 9"), std::string::npos);
  EXPECT_EQ(run({"count", "-x", "path:3", "--n", "11"}).code, 2);
  EXPECT_EQ(run({"count", "-x", "path:3", "--n", "5..2"}).code, 2);
  EXPECT_EQ(run({"count", "-x", "path:3", "--n", "five"}).code, 2);
  EXPECT_EQ(run({"count", "-x", "path:3"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--level", "slow"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"count", "-x", "path:3", "--n", "3", "--csv", "--json"}).code, 2);
}

TEST(Cli, VerifyReportsFailureThroughExitStatus) {
  Outcome broken = run({"verify", "--level", "fast", "--inject-fault", "invert-minor"});
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("FAIL  8"), std::string::npos);
  EXPECT_NE(broken.out.find("PASS  1"), std::string::npos);
}

TEST(Cache, Checksum) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Report, DoublesRoundTrip) {
  for (double x : {0.1, 1.763222834351897, 2.2399778876565, 1e-300, 0.0}) {
    EXPECT_EQ(parse_double(format_double(x)), x);
  }
  EXPECT_THROW(parse_double("1.5x"), std::invalid_argument);
}

}  // namespace
}  // namespace minorgrowth
