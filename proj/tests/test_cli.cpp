#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "expoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = expoly::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Characteristic) {
  const CliRun r = run({"char", "exp(z)+exp(2*z)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "T(r,f) ~ (2/pi) r")) << r.out;
  EXPECT_TRUE(contains(r.out, "0.6366198")) << r.out;
}

TEST(Cli, CharacteristicJson) {
  const CliRun r = run({"--format", "json", "char", "exp(-4*z)"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["q"], 1);
  EXPECT_EQ(j["over_pi"], "4");
}

TEST(Cli, ConstructFrei) {
  const CliRun r = run({"construct", "frei", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "f'' + exp(-z)*f' - 4*f = 0")) << r.out;
  EXPECT_TRUE(contains(r.out, "1 + 4*exp(z) + 6*exp(2*z)")) << r.out;
}

TEST(Cli, SearchNoSolutions) {
  const CliRun r = run({"search", "--eq", "exp(-z)", "-2", "--w", "1", "--q", "1", "--jmax", "6", "--deg", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "no solutions")) << r.out << r.err;
}

TEST(Cli, SearchFindsFrei) {
  const CliRun r = run({"--format", "json", "search", "--eq", "exp(-z)", "-4", "--jmax", "4", "--deg", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["solutions"].size(), 1U);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--eq", "exp(-z)", "-4", "--f", "1+4*exp(z)+6*exp(2*z)"}).code, 0);
  EXPECT_EQ(run({"verify", "--eq", "0", "1", "--f", "exp(z)"}).code, 1);
}

TEST(Cli, RadicandFlag) {
  const CliRun r = run({"--radicand", "6", "verify", "--eq", "1-sqrt(6)*i*exp(-z)+2*exp(-2*z)", "-12", "--f",
                     "1+3*exp(2*z)+sqrt(6)*i*exp(3*z)"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, Riccati) {
  EXPECT_EQ(run({"riccati", "--eq", "-5/3+2/3*exp(-z)", "-8/3", "--logf", "2/3*exp(-z)+8/3*z"}).code, 0);
  EXPECT_EQ(run({"riccati", "--eq", "0", "-1", "--logf", "2*z"}).code, 1);
}

TEST(Cli, Normalize) {
  const CliRun r = run({"--format", "json", "--radicand", "6", "normalize", "1+3*exp(2*z)+sqrt(6)*i*exp(3*z)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["q"], 1);
  EXPECT_EQ(j["f0"], "1");
  EXPECT_EQ(j["bands"].size(), 2U);
}

TEST(Cli, Duality) {
  const CliRun r = run({"--format", "json", "duality", "--strong", "1+z*exp(z)+2*exp(3*z)", "1-exp(-z)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["dual"].get<bool>());
  EXPECT_TRUE(j["strongly_dual"].get<bool>());
}

TEST(Cli, Report) {
  const CliRun r = run({"report", "--eq", "exp(-z)", "-4", "--f", "1+4*exp(z)+6*exp(2*z)"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, CorpusPrefix) {
  const CliRun r = run({"corpus", "growth", "--dir", EXPOLY_CORPUS_DIR});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "PASS")) << r.out;
}

TEST(Cli, UsageAndSyntaxErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  const CliRun r = run({"char", "exp(("});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "syntax error")) << r.err;
  EXPECT_EQ(run({"--radicand", "4", "char", "exp(z)"}).code, 2);
  EXPECT_EQ(run({"construct", "frei", "0"}).code, 2);
}
