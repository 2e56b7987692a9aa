#include "trip_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace trip {
namespace {

using nlohmann::json;

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.emplace_back("trip");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string tmp_path(const std::string& name) { return ::testing::TempDir() + "trip_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json run_json(std::vector<std::string> args, const std::string& name, int want_rc = 0) {
  std::string path = tmp_path(name);
  args.push_back("--out");
  args.push_back(path);
  EXPECT_EQ(run_cli(args), want_rc);
  return json::parse(slurp(path));
}

TEST(Cli, CodePointWorkedExample) {
  json j = run_json({"code-point", "--map", "(e,e,e)", "--point", "1/6,1/3,1/2", "--steps", "4"},
                    "code_point.json");
  EXPECT_EQ(j["command"], "code-point");
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_EQ(j["config"]["map"], "(e,e,e)");
  EXPECT_EQ(j["config"]["steps"], 4);
  EXPECT_EQ(j["result"]["farey_bits"], "0110");
  EXPECT_EQ(j["result"]["gauss_ks"], json::array({0, 2}));
  EXPECT_FALSE(j["result"]["farey_truncated"].get<bool>());
  EXPECT_FALSE(j["result"]["gauss_truncated"].get<bool>());
}

TEST(Cli, WordExpansion) {
  json j = run_json({"word", "--map", "(e,e,e)", "--farey", "0101010"}, "word.json");
  EXPECT_EQ(j["result"]["word"], "32213");
  EXPECT_EQ(j["result"]["length"], 5);
  EXPECT_EQ(j["result"]["letter_counts"], json::array({1, 2, 2}));
}

TEST(Cli, ComplexityCsv) {
  std::string path = tmp_path("profile.csv");
  int rc = run_cli({"complexity", "--map", "(e,23,23)", "--farey",
                    "0110100110101101001101011010", "--n-max", "6", "--csv", "--out", path});
  EXPECT_EQ(rc, 0);
  std::string csv = slurp(path);
  EXPECT_EQ(csv.rfind("n,p\n", 0), 0u);
  EXPECT_NE(csv.find("\n1,3\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"nosuch"}), 2);
  EXPECT_EQ(run_cli({}), 2);
  EXPECT_EQ(run_cli({"code-point", "--map", "(e,e,e)"}), 2);  // missing --point
  EXPECT_EQ(run_cli({"code-point", "--map", "(e,e)", "--point", "1,0,0"}), 2);
  EXPECT_EQ(run_cli({"code-point", "--map", "(e,e,e)", "--point", "2,2,2"}), 2);
  // Exactly one coding source.
  EXPECT_EQ(run_cli({"word", "--farey", "01", "--gauss", "1"}), 2);
  EXPECT_EQ(run_cli({"word"}), 2);
  // certify is specific to (e,e,e).
  EXPECT_EQ(run_cli({"certify", "--map", "(e,13,e)", "--gauss", "1,1,1,1"}), 2);
  // render depth out of range.
  EXPECT_EQ(run_cli({"render", "--steps", "13"}), 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}), 0); }

TEST(Cli, ReproduceTablesAndDeterminism) {
  json a = run_json({"reproduce-tables"}, "tables_a.json");
  EXPECT_TRUE(a["result"]["all_match"].get<bool>());
  ASSERT_EQ(a["result"]["tables"].size(), 2u);

  json b = run_json({"reproduce-tables"}, "tables_b.json");
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, ClassesListsAllTwentyOne) {
  json j = run_json({"classes"}, "classes.json");
  EXPECT_EQ(j["result"]["count"], 21);
  ASSERT_EQ(j["result"]["classes"].size(), 21u);
  EXPECT_FALSE(j["result"].contains("verdict_suite"));
}

TEST(Cli, SeedResolution) {
  ASSERT_EQ(setenv("TRIP_SEED", "notanumber", 1), 0);
  EXPECT_EQ(run_cli({"hidden-r2", "--trials", "10"}), 2);
  ASSERT_EQ(setenv("TRIP_SEED", "777", 1), 0);
  json j = run_json({"hidden-r2", "--trials", "200", "--jobs", "2"}, "hidden.json");
  EXPECT_EQ(j["config"]["seed"], 777);
  EXPECT_EQ(j["result"]["reached_ygtz"].get<long>() + j["result"]["hit_zero"].get<long>() +
                j["result"]["exhausted"].get<long>(),
            200);
  ASSERT_EQ(unsetenv("TRIP_SEED"), 0);
  json k = run_json({"hidden-r2", "--trials", "10"}, "hidden_default.json");
  EXPECT_EQ(k["config"]["seed"], 12345);
}

TEST(Cli, RenderWritesSvg) {
  std::string path = tmp_path("partition.svg");
  EXPECT_EQ(run_cli({"render", "--map", "(e,13,e)", "--steps", "3", "--mode", "regions", "--out",
                     path}),
            0);
  std::string svg = slurp(path);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(run_cli({"render", "--mode", "bogus"}), 2);
}

TEST(Cli, AnalyzeAndCheckSubcommands) {
  json j = run_json({"analyze-e13e", "--prefix", "1,1", "--period", "0", "--n-max", "24"},
                    "e13e.json");
  EXPECT_EQ(j["result"]["verdict"], "bounded");
  EXPECT_EQ(j["result"]["ok"], true);

  json k = run_json({"check-e23e", "--gauss", "1,0,2,1,0,0,1,1,2,0,1,0,1,1,0,0,2,1,0,1,1,0,1,0",
                     "--n-max", "24"},
                    "e23e.json");
  EXPECT_EQ(k["result"]["ok"], true);
  EXPECT_EQ(k["config"]["dropped_last_digit"], false);

  json s = run_json({"search", "--map", "(e,123,e)", "--max-bits", "9", "--budget", "2000"},
                    "search.json");
  EXPECT_EQ(s["result"]["found"], true);
  EXPECT_EQ(s["result"]["bits"], "000001010");
}

}  // namespace
}  // namespace trip
