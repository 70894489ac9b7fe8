#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "padicft/cli.hpp"

using namespace padicft;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "padicft");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyIdentitiesSuite) {
  const auto res = run_cli({"verify", "--suite", "identities", "--p", "2", "--r", "1"});
  EXPECT_EQ(res.code, cli::kOk) << res.err;
  const auto j = json::parse(res.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["passed"].get<bool>());
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  for (const char* expected : {"q_binomial_factorial_ratio", "ldu_decomposition_symbolic",
                               "lower_factor_identity_at_zeta", "cyclotomic_divisibility"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
}

TEST(Cli, VerifyAllAtThree) {
  const auto res = run_cli({"verify", "--suite", "all", "--p", "3", "--r", "1"});
  EXPECT_EQ(res.code, cli::kOk) << res.err;
  EXPECT_TRUE(json::parse(res.out)["passed"].get<bool>());
}

TEST(Cli, VerifyCsv) {
  const auto res = run_cli({"verify", "--suite", "matrices", "--p", "2", "--r", "1", "--format", "csv"});
  EXPECT_EQ(res.code, cli::kOk);
  EXPECT_EQ(res.out.rfind("check,passed,detail\n", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"verify", "--p", "4"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "--p", "2"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "--p", "2", "--r", "1", "--suite", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"witness", "--p", "2", "--r", "1", "--e", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"witness", "--p", "2", "--r", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"witness", "--p", "2", "--r", "1", "--e", "abc"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gamma", "--p", "2", "--rmax", "1", "--delta", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gamma", "--p", "2", "--rmax", "1", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
}

TEST(Cli, Help) {
  const auto res = run_cli({"--help"});
  EXPECT_EQ(res.code, cli::kOk);
  EXPECT_NE(res.out.find("witness"), std::string::npos);
}

TEST(Cli, BudgetRefusal) {
  const auto res = run_cli({"gamma", "--p", "2", "--rmax", "5"});
  EXPECT_EQ(res.code, cli::kBudgetExceeded);
  EXPECT_NE(res.err.find("1024"), std::string::npos);
  EXPECT_EQ(run_cli({"gamma", "--p", "3", "--rmax", "3"}).code, cli::kBudgetExceeded);
  EXPECT_EQ(run_cli({"witness", "--p", "2", "--r", "4", "--e", "1"}).code, cli::kBudgetExceeded);
}

TEST(Cli, GammaTable) {
  const auto res = run_cli({"gamma", "--p", "2", "--rmax", "2"});
  EXPECT_EQ(res.code, cli::kOk) << res.err;
  const auto j = json::parse(res.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["gamma_exponent"], "1/2");
  EXPECT_EQ(j["rows"][1]["gamma_exponent"], "1/1");
  EXPECT_EQ(j["rows"][1]["d"], 16);
  EXPECT_TRUE(j["gamma_non_increasing"].get<bool>());
  EXPECT_TRUE(j["rows"][0].contains("critical_interval"));
}

TEST(Cli, GammaCsv) {
  const auto res = run_cli({"gamma", "--p", "2", "--rmax", "1", "--format", "csv"});
  EXPECT_EQ(res.code, cli::kOk);
  EXPECT_EQ(res.out, "r,d,gamma_exponent,argmin_n\n1,4,1/2,1\n");
  const auto three = run_cli({"gamma", "--p", "3", "--rmax", "1", "--format", "csv"});
  EXPECT_EQ(three.out, "r,d,gamma_exponent,argmin_n\n1,9,1/3,4\n");
}

TEST(Cli, WitnessOutcomes) {
  const auto ok = run_cli({"witness", "--p", "2", "--r", "1", "--e", "1/2"});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  const auto j = json::parse(ok.out);
  EXPECT_EQ(j["status"], "attained");
  EXPECT_TRUE(j["verification"]["passed"].get<bool>());
  EXPECT_EQ(j["phi"][0].size(), 2u);

  const auto refused = run_cli({"witness", "--p", "2", "--r", "1", "--e", "2"});
  EXPECT_EQ(refused.code, cli::kNotAttainable);
  EXPECT_EQ(json::parse(refused.out)["status"], "not_attainable");
}

TEST(Cli, OutputIsDeterministicAndWritable) {
  const auto a = run_cli({"gamma", "--p", "3", "--rmax", "1"});
  const auto b = run_cli({"gamma", "--p", "3", "--rmax", "1"});
  EXPECT_EQ(a.out, b.out);

  const std::string path = ::testing::TempDir() + "padicft_cli_witness.json";
  const auto res = run_cli({"witness", "--p", "2", "--r", "1", "--e", "1/2", "--out", path});
  EXPECT_EQ(res.code, cli::kOk);
  EXPECT_TRUE(res.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(json::parse(buf.str())["status"], "attained");
  std::remove(path.c_str());
}

TEST(Cli, RunSuiteRejectsUnknownNames) {
  EXPECT_THROW(cli::run_suite("bogus", 2, 1), std::invalid_argument);
  const auto checks = cli::run_suite("fourier", 2, 1);
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
