#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "hypsec/cli/cli.hpp"

namespace hypsec::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hypsec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void expect_round_trip(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  EXPECT_EQ(parsed.dump(2) + "\n", text);
}

TEST(Cli, ClassifyTextOverQ) {
  const auto r = invoke({"classify", "--section", "X, 2Y, 3Z", "--field", "Q"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("type a: ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("non-singular Del Pezzo surface"), std::string::npos);
}

TEST(Cli, ClassifyJsonTypeE) {
  const auto r = invoke({"classify", "--section", "Y, 0, 0", "--field", "7", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["type"], "e");
  EXPECT_EQ(j["line"], "Y");
  EXPECT_EQ(j["embedded_point"], "(1,0,0)");
  EXPECT_EQ(j["verdict"]["kind"], "union_of_two_cubics");
  expect_round_trip(r.out);
}

TEST(Cli, JsonRoundTripsForEveryCommand) {
  const std::vector<std::vector<std::string>> runs = {
      {"classify", "--section", "Y, Z, X + Y", "--output", "json"},
      {"classify", "--hyperplane", "1,0,0,0,0,0,0,0", "--field", "5", "--output", "json"},
      {"oracle", "--section", "X, 0, Z", "--output", "json"},
      {"oracle", "--section", "Y, Z, 0", "--field", "7", "--output", "json"},
      {"count", "--section", "X, 2Y, 3Z", "--field", "7", "--output", "json"},
      {"sweep", "--field", "7", "--sample", "200", "--seed", "3", "--output", "json"},
      {"roundtrip", "--section", "1/2 X + Y, Z, -X", "--output", "json"},
  };
  for (const auto& args : runs) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kOk) << args[0] << ": " << r.err;
    expect_round_trip(r.out);
  }
}

TEST(Cli, OracleAgreement) {
  const auto r = invoke({"oracle", "--section", "Z, Z+X, 0", "--output", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["deduced_type"], "c");
  EXPECT_EQ(j["classifier_type"], "c");
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["reductions"].size(), 3u);
}

TEST(Cli, CountReport) {
  const auto r = invoke({"count", "--section", "X, 0, Z", "--field", "7", "--output", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["section_count"], 120);
  EXPECT_EQ(j["N"], 9);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(invoke({"count", "--section", "X, 0, Z", "--field", "7", "--serial"}).code, kOk);
}

TEST(Cli, SweepSummary) {
  const auto r = invoke({"sweep", "--field", "5", "--sample", "300", "--output", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["classes"], 300);
  EXPECT_TRUE(j["tallies"].contains("e"));
}

TEST(Cli, InvalidInputsExitWithOne) {
  const std::vector<std::vector<std::string>> bad = {
      {"classify", "--section", "X, W, Z"},
      {"classify", "--section", "X, Y, Z"},
      {"classify"},
      {"classify", "--section", "X, 0, Z", "--hyperplane", "1,0,0,0,0,0,0,0"},
      {"classify", "--hyperplane", "1,0,0"},
      {"classify", "--section", "X, 0, Z", "--field", "4"},
      {"classify", "--section", "X, 0, Z", "--field", "3"},
      {"classify", "--section", "X, 0, Z", "--field", "F7"},
      {"classify", "--section", "1/7 X, 0, Z", "--field", "7"},
      {"classify", "--section", "X, 0, Z", "--output", "xml"},
      {"count", "--section", "X, 0, Z", "--field", "Q"},
      {"count", "--section", "X, 0, Z"},
      {"sweep", "--field", "Q", "--sample", "10"},
      {"sweep", "--field", "5"},
      {"sweep", "--field", "5", "--sample", "10", "--exhaustive"},
      {"sweep", "--field", "11", "--exhaustive"},
      {"oracle", "--section", "X, 0, Z", "--dmax", "3"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kInvalidInput) << (args.empty() ? "<none>" : args[0]) << " " << r.out;
    if (!args.empty() && args[0] != "frobnicate") EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "hypsec_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = invoke({"roundtrip", "--section", "X, 2Y, 3Z", "--field", "7", "--output", "json", "--out",
                         path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j["proportional"], true);
  EXPECT_EQ(j["section_back"], "X, 0, 6*Z");
  EXPECT_EQ(j["hyperplane"], "(1,0,0,0,0,0,0,0)");
  std::filesystem::remove(path);
}

TEST(Cli, RunDirectly) {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.section = "Y, 0, Z";
  cfg.field = "11";
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kOk);
  EXPECT_EQ(out.str().rfind("type b: ", 0), 0u);
}

}  // namespace
}  // namespace hypsec::cli
