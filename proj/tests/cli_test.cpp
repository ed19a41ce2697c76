#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "autoequiv/cli.hpp"
#include "autoequiv/model_io.hpp"
#include "support/fixtures.hpp"

namespace autoequiv {
namespace {

using testing::data_path;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "autoequiv");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("autoequiv_cli_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

TEST(Cli, HelpAndBadFlags) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json")}).code, 2);
  EXPECT_EQ(run({"graph", data_path("fig7_g1.json"), "--check", "planar"}).code, 2);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", data_path("fig7_g1.json")}).code, 0);
  const auto bad = run({"validate", data_path("arity_mismatch.json"), "--format", "json"});
  EXPECT_EQ(bad.code, 2);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["violations"][0]["path"], "interpretations[\"G\"].tuples[\"E\"](V:1,V:2,V:0)");
  const auto missing = run({"validate", data_path("nope.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"validate", data_path("malformed.json")}).code, 2);
}

TEST(Cli, Aut) {
  auto r = run({"aut", data_path("fig7_g1.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["interpretations"][0]["order"], 6);
  EXPECT_EQ(j["interpretations"][0]["elements"].size(), 6u);

  r = run({"aut", data_path("fig8_g2.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Aut(G): order 2\n  generators: V:(3 4)\n  elements: id V:(3 4)\n"),
            std::string::npos);

  r = run({"aut", data_path("empty4.json"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["interpretations"][0]["order"], 24);
}

TEST(Cli, EquivAndVerify) {
  const auto r = run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"), "--format",
                      "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["witness"]["mus"][0]["V"], nlohmann::json::parse("[3, 0, 1, 2]"));

  const auto witness = temp_path("witness.json");
  write_text_file(witness, r.out);
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"), "--verify", witness})
                .code,
            0);
  write_text_file(witness, R"({"alpha": [[0, 0]], "mus": ["id"]})");
  const auto rejected =
      run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"), "--verify", witness});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_NE(rejected.out.find("witness rejected"), std::string::npos);
  write_text_file(witness, R"j({"mu": "V:(0 3)"})j");
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"), "--mode", "model",
                 "--verify", witness})
                .code,
            0);
  std::filesystem::remove(witness);
}

TEST(Cli, EquivNegativesAndErrors) {
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("path4.json")}).code, 1);
  EXPECT_EQ(run({"equiv", data_path("c4.json"), data_path("klein4.json")}).code, 1);
  EXPECT_EQ(run({"equiv", data_path("match_f1.json"), data_path("match_f2.json")}).code, 1);
  EXPECT_EQ(run({"equiv", data_path("match_f1.json"), data_path("single3.json")}).code, 1);
  EXPECT_EQ(run({"equiv", data_path("match_f1.json"), data_path("match_f2.json"), "--mode", "model"})
                .code,
            2);
  const auto budget = run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"),
                           "--budget", "3"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_NE(budget.err.find("budget"), std::string::npos);
}

TEST(Cli, BudgetEnvironmentVariable) {
  ::setenv("AUTOEQUIV_BUDGET", "3", 1);
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json")}).code, 2);
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json"), "--budget",
                 "100000"})
                .code,
            0);
  ::setenv("AUTOEQUIV_BUDGET", "lots", 1);
  EXPECT_EQ(run({"equiv", data_path("fig7_g1.json"), data_path("fig7_g2.json")}).code, 2);
  ::unsetenv("AUTOEQUIV_BUDGET");
}

TEST(Cli, AlgebraMode) {
  const auto r = run({"equiv", data_path("const3.json"), data_path("swap3.json"), "--mode",
                      "algebra"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent\ndelta: id\n");
}

TEST(Cli, Transform) {
  const auto once = temp_path("once.json");
  const auto twice = temp_path("twice.json");
  ASSERT_EQ(run({"transform", data_path("fig7_g1.json"), "--complement", "-o", once}).code, 0);
  ASSERT_EQ(run({"transform", once, "--complement", "-o", twice}).code, 0);
  const auto original = run({"transform", data_path("fig7_g1.json"), "--sigma", "id"});
  EXPECT_EQ(original.code, 0);
  EXPECT_EQ(read_text_file(twice), original.out);
  EXPECT_EQ(run({"transform", data_path("c4.json"), "--sigma", "G:(0 1)"}).code, 2);
  EXPECT_EQ(run({"transform", data_path("c4.json"), "--sigma", "G:(1 3)"}).code, 0);
  EXPECT_EQ(run({"transform", data_path("c4.json")}).code, 2);
  EXPECT_EQ(run({"transform", data_path("c4.json"), "--simple-complement"}).code, 2);
  std::filesystem::remove(once);
  std::filesystem::remove(twice);
}

TEST(Cli, Graph) {
  EXPECT_EQ(run({"graph", data_path("fig7_g1.json"), "--check", "tree"}).code, 0);
  EXPECT_EQ(run({"graph", data_path("fig7_g2.json"), "--check", "connected"}).code, 1);
  EXPECT_EQ(run({"graph", data_path("malformed.json"), "--check", "tree"}).code, 2);
  EXPECT_EQ(run({"graph", data_path("c4.json"), "--check", "tree"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"aut", data_path("fig8_g1.json"), "--format", "json"},
           {"equiv", data_path("fig8_g1.json"), data_path("fig8_g2.json")},
           {"transform", data_path("fig7_g1.json"), "--simple-complement"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

}  // namespace
}  // namespace autoequiv
