#include <gtest/gtest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace cauchy {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(CliTable, ThreeDigitTable) {
  const Result r = run({"table", "--dmin", "2", "--dmax", "33", "--digits", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 33u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"d", "k"}));
  EXPECT_EQ(rows[17][0], "18");
  EXPECT_EQ(rows[17][1], "0.095");
  EXPECT_NE(r.out.find("\n18,0.095\n"), std::string::npos);
}

TEST(CliTable, SingleRowAndDefaults) {
  const Result r = run({"table", "--dmin", "3", "--dmax", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "d,k\n3,0.250000\n");
}

TEST(CliTable, CsvRoundTripsAtPrintedPrecision) {
  const Result r = run({"table", "--dmin", "2", "--dmax", "64", "--digits", "12"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int d = std::stoi(rows[i][0]);
    EXPECT_DOUBLE_EQ(std::stod(rows[i][1]), round_decimals(k_closed(d), 12)) << d;
  }
}

TEST(CliTable, JsonIsShortestRoundTrip) {
  const Result r = run({"table", "--dmin", "2", "--dmax", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 9u);
  for (const auto& row : j) EXPECT_EQ(row["k"].get<double>(), k_closed(row["d"].get<int>()));
}

TEST(CliTable, PrettyNotesFourDigitRow) {
  const Result r = run({"table", "--dmin", "2", "--dmax", "6", "--digits", "3", "--format", "pretty"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.1875"), std::string::npos);
}

TEST(CliTable, InvalidRangesExitTwo) {
  EXPECT_EQ(run({"table", "--dmin", "5", "--dmax", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--dmin", "1", "--dmax", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--dmax", "65"}).code, 2);
  EXPECT_EQ(run({"table", "--digits", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--dmin", "two"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
}

TEST(CliSeries, CompareReportsRelativeError) {
  const Result r = run({"series", "--d", "5", "--terms", "5", "--compare"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"d", "terms", "series", "k_closed", "rel_err"}));
  EXPECT_LE(std::stod(rows[1][4]), 1e-4);
}

TEST(CliSeries, LeadingTermAndErrors) {
  const Result r = run({"series", "--d", "1000", "--terms", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["series"].get<double>(), 1.0 / std::sqrt(2.0 * std::numbers::pi * 1000.0));
  EXPECT_EQ(run({"series", "--d", "5", "--terms", "6"}).code, 2);
  EXPECT_EQ(run({"series", "--d", "1"}).code, 2);
}

TEST(CliVerify, CubePasses) {
  const Result r = run({"verify", "--shape", "cube", "--d", "3", "--n", "100000", "--seed", "42", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["predicted"].get<double>(), 1.5);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["n"].get<int>(), 100000);
  EXPECT_EQ(j["seed"].get<int>(), 42);
}

TEST(CliVerify, BallIsExact) {
  const Result r = run({"verify", "--shape", "ball", "--d", "7", "--n", "10", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(std::stod(rows[1][5]), 0.0);  // stderr
  EXPECT_EQ(rows[1][10], "true");
}

TEST(CliVerify, PolytopeFile) {
  const Result r = run({"verify", "--shape", "file:" CAUCHY_DATA_DIR "/simplex3.txt", "--d", "3", "--n", "200000",
                        "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(CliVerify, ReproducibleFromSeed) {
  const std::vector<std::string> args{"verify", "--shape", "cube", "--d", "4", "--n", "5000", "--seed", "3", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(run(threaded).out, run(args).out);
}

TEST(CliVerify, StatisticalFailureExitsOne) {
  // Two samples of a long thin box give a heavy-tailed z; some seeds exceed 4.
  const std::string path = ::testing::TempDir() + "/needle.txt";
  {
    std::ofstream f(path);
    f << "3 8\n";
    for (int m = 0; m < 8; ++m) f << (m & 1 ? 1000 : 0) << ' ' << (m & 2 ? 1 : 0) << ' ' << (m & 4 ? 1 : 0) << '\n';
  }
  int failures = 0;
  for (int seed = 0; seed < 40; ++seed) {
    const int code = run({"verify", "--shape", "file:" + path, "--n", "2", "--seed", std::to_string(seed)}).code;
    EXPECT_TRUE(code == 0 || code == 1) << code;
    failures += code == 1;
  }
  EXPECT_GT(failures, 0);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--shape", "blob"}).code, 2);
  EXPECT_EQ(run({"verify", "--shape", "cube", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--shape", "cube", "--d", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--shape", "file:/nonexistent.txt"}).code, 2);
  EXPECT_EQ(run({"verify", "--shape", "file:" CAUCHY_DATA_DIR "/simplex3.txt", "--d", "4"}).code, 2);
  const std::string bad = ::testing::TempDir() + "/bad.txt";
  {
    std::ofstream f(bad);
    f << "3 4\n0 0 0\n1 0 0\n0 1 x\n0 0 1\n";
  }
  const Result r = run({"verify", "--shape", "file:" + bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":4:"), std::string::npos) << r.err;
}

TEST(CliGrain, SunLikeDefaults) {
  const Result r = run({"grain"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "T_grain = 278.617 K\n");
  EXPECT_EQ(run({"grain", "--albedo", "1", "--format", "csv"}).out, "T_grain_K\n0\n");
}

TEST(CliGrain, NamesViolatedConstraint) {
  const Result r = run({"grain", "--dist", "1e8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("distance must exceed the star radius"), std::string::npos);
  EXPECT_EQ(run({"grain", "--albedo", "2"}).code, 2);
}

TEST(CliPlotdata, DecreasingColumn) {
  const Result r = run({"plotdata", "--dmax", "33"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 33u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"d", "k_closed", "k_series5", "leading_term"}));
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][1]), std::stod(rows[i - 1][1]));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(std::stod(rows[i][1]), k_closed(std::stoi(rows[i][0])));
  EXPECT_EQ(csv_rows(run({"plotdata", "--dmax", "2"}).out).size(), 2u);
  EXPECT_EQ(run({"plotdata", "--dmax", "65"}).code, 2);
}

TEST(Cli, HelpAndMissingSubcommand) {
  const Result h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("verify"), std::string::npos);
  EXPECT_EQ(run({"verify", "--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

}  // namespace
}  // namespace cauchy
