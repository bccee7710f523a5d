#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "degenkit/serialization.hpp"
#include "degenkit/toric_model.hpp"

namespace {

using degenkit::Json;
namespace cli = degenkit::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ClassAgrees) {
  const auto r = run({"class", "--r", "3", "--n", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("AGREE"), std::string::npos);
  EXPECT_NE(r.out.find("1 + 3*L^2"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ClassJson) {
  const auto r = run({"class", "--r", "1", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["closed"]["coeffs"], Json::parse("[1,1,1,1,1,1]"));
  EXPECT_EQ(j["residue_mod_L"], 1);
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"class", "--r", "0", "--n", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"class", "--r", "2", "--n", "13"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"class", "--r", "2", "--n", "13", "--max-n", "13"}).code, cli::kExitOk);
  EXPECT_EQ(run({"class", "--r", "31", "--n", "3", "--max-r", "40"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"class", "--format", "xml", "--r", "1", "--n", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--n", "2", "--d", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--n", "2", "--k", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--n", "2", "--k", "1", "--d", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--scope", "nothing"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"dual", "--rays", "[[1,0],[-1,0]]"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"dual", "--rays", "[[1,0,0]]"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"dual", "--rays", "not json"}).code, cli::kExitUsage);
  const auto r = run({"class", "--r", "0", "--n", "2"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Dual) {
  const auto r = run({"dual", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(Json::parse(r.out)["dual"]["rays"], Json::parse("[[0,0,1],[0,1,0],[1,0,0],[1,1,-1]]"));
  const auto rays = run({"dual", "--rays", "[[1,0],[1,2]]", "--format", "json"});
  ASSERT_EQ(rays.code, cli::kExitOk);
  EXPECT_EQ(Json::parse(rays.out)["dual"]["rays"], Json::parse("[[0,1],[2,-1]]"));
}

TEST(Cli, ResolveJson) {
  const auto r = run({"resolve", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["fan"]["max_cones"].size(), 2u);
  EXPECT_EQ(j["charts"].size(), 2u);
  EXPECT_EQ(j["semistable"]["snc"], true);
  // Re-serializing the parsed fan and charts reproduces the output.
  EXPECT_EQ(Json(degenkit::toriclat::fan_from_json(j["fan"])).dump(), j["fan"].dump());
  for (const auto& c : j["charts"]) EXPECT_EQ(Json(degenkit::toriclat::chart_from_json(c)).dump(), c.dump());

  const auto one = run({"resolve", "--n", "1", "--format", "json"});
  ASSERT_EQ(one.code, cli::kExitOk);
  const auto j1 = Json::parse(one.out);
  EXPECT_EQ(j1["fan"]["max_cones"].size(), 1u);
  EXPECT_TRUE(j1["charts"].empty());
}

TEST(Cli, ResolveEight) {
  const auto r = run({"resolve", "--n", "8", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(Json::parse(r.out)["fan"]["max_cones"].size(), 8u);
}

TEST(Cli, ReportRoundTrip) {
  const auto r = run({"report", "--n", "3", "--d", "4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = Json::parse(r.out);
  const auto report = j.get<degenkit::degeneration::VerificationReport>();
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(Json(report).dump(2) + "\n", r.out);
  EXPECT_EQ(run({"report", "--n", "2", "--k", "2"}).code, cli::kExitOk);
}

TEST(Cli, VerifyArrangementJson) {
  const auto r = run({"verify", "--scope", "lemma-arrangement", "--max-n", "12", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["rows"].size(), 170u);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args{"verify", "--scope", "lemma-toric", "--max-n", "4"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
