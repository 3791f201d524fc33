#include <gtest/gtest.h>

#include <sstream>

#include "ffp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ffp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandHermiteRow) {
  const auto r = run({"expand", "--family", "hermite", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 - 22/d + 32/d^2 - 15/d^3\n");
}

TEST(Cli, ExpandAllRows) {
  const auto r = run({"expand", "--family", "hermite"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m_2 = 1 - 1/d\n"), std::string::npos);
  EXPECT_NE(r.out.find("m_4 = 2 - 5/d + 3/d^2\n"), std::string::npos);
}

TEST(Cli, FamilyLaguerreJson) {
  const auto r = run({"family", "--family", "laguerre", "--lambda", "1/3", "--d", "4", "--emit", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"][0]["a"], nlohmann::json::parse(R"(["1","4/3","1/6","-1/54","5/2592"])"));
  EXPECT_EQ(j["subcommand"], "family");
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_TRUE(j["params"].contains("caps"));
}

TEST(Cli, VerifyReportIsByteStable) {
  const std::vector<std::string> args{"verify", "--identity", "thm1.1-cumulant", "--d", "6", "--n", "6", "--seed", "7"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_EQ(j["results"][0]["identity"], "thm1.1-cumulant");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"expand", "--bogus"}).code, 2);
  EXPECT_EQ(run({"family", "--family", "laguerre", "--lambda", "1/0", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"expand", "--family", "hermite", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"--caps", "pair_sweep=4", "expand", "--family", "hermite", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"--caps", "nope=4", "expand", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"convolve", "--p", "{\"roots\":[1]}", "--q", "{\"roots\":[1,2]}"}).code, 2);
}

TEST(Cli, CapsCanBeRaised) {
  const auto r = run({"--caps", "pair_sweep=9", "expand", "--family", "hermite", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("14 - ", 0), 0u);
}

TEST(Cli, Convolve) {
  const auto r = run({"convolve", "--p", R"({"roots":[1,2]})", "--q", R"({"roots":[1,3]})", "--emit", "pretty"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 - 6x + 6\n");
}

TEST(Cli, GenusTableAndInfinitesimal) {
  EXPECT_EQ(run({"genus-table", "--n", "5", "--u", "1,-2,1/3,0,2", "--v", "3,1,1,-1,1/2"}).code, 0);
  const auto r = run({"infinitesimal", "--family", "laguerre", "--lambda", "1", "--order", "4", "--emit", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4,-29,-29,-29,"), std::string::npos);
}

TEST(Cli, TransformAndDerivativeFlow) {
  const auto k = run({"transform", "--in", R"({"m":[0,1,0,2,0,5]})", "--op", "k", "--emit", "csv"});
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(k.out.rfind("exponent,coefficient\n-1,1\n0,0\n1,1\n2,0\n", 0), 0u);
  const auto f = run({"derivative-flow", "--family", "hermite", "--t", "1/2", "--n", "2", "--emit", "csv"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("16,7/4,2,1/4,2\n"), std::string::npos);
}
