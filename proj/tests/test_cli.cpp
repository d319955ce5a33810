#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gcg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = gcg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv(gcg::cli::kOutputDirEnv);
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

}  // namespace

TEST(Cli, KmaxExamples) {
  auto r = run({"kmax", "--m", "6", "--alpha", "1", "--p", "9/10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "kmaxM=13 kmaxA=14 ordinary=true d=4");
  r = run({"kmax", "--m", "10", "--alpha", "1/2", "--p", "1/4"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "kmaxM=8 kmaxA=8 ordinary=false d=5");
  EXPECT_EQ(run({"kmax", "--m", "0", "--alpha", "1", "--p", "9/10"}).code, gcg::cli::kBadArguments);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run({}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"frobnicate"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"kmax", "--m", "3", "--alpha", "2", "--p", "1/4"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"kmax", "--m", "3", "--alpha", "x", "--p", "1/4"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"kmax", "--m", "3", "--alpha", "1/2"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--m-max", "3"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"curve", "--graph", "2:4", "--alpha", "1/2", "--p", "1/4"}).code, gcg::cli::kBadArguments);
  EXPECT_EQ(run({"curve", "--graph", "LINE", "--m", "2", "--alpha", "1/2", "--p", "1/4", "--k", "0..7"}).code,
            gcg::cli::kBadArguments);
}

TEST(Cli, CurveLineExample) {
  const auto r = run({"curve", "--graph", "LINE", "--adv", "M", "--m", "4", "--alpha", "1/2", "--p", "1/4",
                      "--k", "0..3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "k,welfare,graph,adversary,m,alpha,p\n"
            "0,12,LINE,M,4,0.5,0.25\n"
            "1,11.75,LINE,M,4,0.5,0.25\n"
            "2,11.5,LINE,M,4,0.5,0.25\n"
            "3,11.25,LINE,M,4,0.5,0.25\n");
}

TEST(Cli, CurveAllShowsThresholdBreakpoints) {
  const auto r = run({"curve", "--graph", "ALL", "--adv", "A", "--m", "6", "--alpha", "1", "--p", "9/10",
                      "--k", "12..14"});
  EXPECT_EQ(r.code, 0);
  // LINE holds below 13 and COMPLETE below 14.
  EXPECT_NE(r.out.find("12,19.5,LINE"), std::string::npos);
  EXPECT_NE(r.out.find("13,5.7,LINE"), std::string::npos);
  EXPECT_NE(r.out.find("13,16.8,COMPLETE"), std::string::npos);
  EXPECT_NE(r.out.find("14,4.8,COMPLETE"), std::string::npos);
}

TEST(Cli, CurveProfileIsQuoted) {
  const auto r = run({"curve", "--graph", "1:2,2:3+1lone", "--alpha", "1/2", "--p", "1/4", "--k", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0,9,\"1:2,2:3+1lone\",M,3,0.5,0.25"), std::string::npos);
}

TEST(Cli, OptimizeExamples) {
  auto r = run({"optimize", "--adv", "A", "--k", "13", "--m", "6", "--alpha", "1", "--p", "9/10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "graph=COMPLETE welfare=16.8\n");
  r = run({"optimize", "--adv", "M", "--k", "0", "--m", "6", "--alpha", "1", "--p", "9/10"});
  EXPECT_EQ(r.out.rfind("graph=LINE", 0), 0u);
  r = run({"optimize", "--adv", "M", "--k", "2", "--m", "3", "--alpha", "1/2", "--p", "1/4", "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exact_profile="), std::string::npos);
  EXPECT_EQ(r.out.find("gap=-"), std::string::npos);
  r = run({"optimize", "--adv", "M", "--k", "2", "--m", "9", "--alpha", "1/2", "--p", "1/4", "--exact"});
  EXPECT_EQ(r.code, gcg::cli::kResourceCeiling);
}

TEST(Cli, RegretExamples) {
  auto r = run({"regret", "--planned", "M", "--realized", "A", "--k", "13", "--m", "6", "--alpha", "1", "--p",
                "9/10", "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("R_decimal=0."), std::string::npos);
  EXPECT_EQ(r.out.find("R=0/1"), std::string::npos);
  r = run({"regret", "--planned", "A", "--realized", "A", "--k", "5", "--m", "6", "--alpha", "1", "--p",
           "9/10"});
  EXPECT_NE(r.out.find("R=0/1"), std::string::npos);
  r = run({"regret", "--planned", "M", "--realized", "A", "--k", "40", "--m", "6", "--alpha", "1", "--p",
           "9/10"});
  EXPECT_EQ(r.code, gcg::cli::kDomainError);
}

TEST_F(CliFiles, VerifyWritesReportAndStatus) {
  const auto out = dir_ / "slope.csv";
  auto r = run({"verify", "--suite", "lemma_slope", "--m-max", "12", "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("failures=0"), std::string::npos);
  EXPECT_EQ(slurp(out).rfind("suite,case_id,m,alpha,p,k,lhs,rhs,pass\n", 0), 0u);
  EXPECT_FALSE(fs::exists(dir_ / "slope.csv.tmp"));

  r = run({"verify", "--suite", "lemma_sparse_mid", "--m-min", "6", "--m-max", "6", "--grid", "1:9/10",
           "--out", (dir_ / "mid.csv").string()});
  EXPECT_EQ(r.code, gcg::cli::kVerificationFailed);
  EXPECT_NE(r.out.find("failures=1"), std::string::npos);

  r = run({"verify", "--suite", "lemma_B", "--m-max", "30"});
  EXPECT_EQ(r.code, gcg::cli::kResourceCeiling);
}

TEST_F(CliFiles, OutputDirectoryFromEnvironment) {
  setenv(gcg::cli::kOutputDirEnv, dir_.c_str(), 1);
  const auto r = run({"curve", "--graph", "SPARSE", "--m", "2", "--alpha", "1/2", "--p", "1/4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(dir_ / "curve.csv").rfind("k,welfare,", 0), 0u);
}

TEST_F(CliFiles, UnwritableOutputIsIoError) {
  const auto r = run({"curve", "--graph", "SPARSE", "--m", "2", "--alpha", "1/2", "--p", "1/4", "--out",
                      (dir_ / "missing" / "x.csv").string()});
  EXPECT_EQ(r.code, gcg::cli::kIoError);
}

TEST_F(CliFiles, SimulateIsDeterministic) {
  const std::vector<std::string> base{"simulate", "--profile", "1:2", "--alpha", "1/2", "--p", "1/4",
                                      "--steps", "200000", "--seed", "7"};
  auto first = base;
  first.insert(first.end(), {"--out", (dir_ / "a.csv").string()});
  auto second = base;
  second.insert(second.end(), {"--out", (dir_ / "b.csv").string()});
  const auto r1 = run(first);
  const auto r2 = run(second);
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, "modal=xx emergent=xx match=true\n");
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
}

TEST(Cli, SimulateLoneNode) {
  const auto r = run({"simulate", "--profile", "2:3+1lone", "--attacks", "1:1", "--alpha", "1/2", "--p", "1/4",
                      "--steps", "300000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("modal=xxxy emergent=xxxy match=true"), std::string::npos);
}

TEST(Cli, SimulateRejectsBadInput) {
  EXPECT_EQ(run({"simulate", "--profile", "1:2", "--alpha", "1/2", "--p", "1/4", "--temperature", "0"}).code,
            gcg::cli::kBadArguments);
  EXPECT_EQ(run({"simulate", "--profile", "1:2", "--attacks", "5:1", "--alpha", "1/2", "--p", "1/4"}).code,
            gcg::cli::kDomainError);
  EXPECT_EQ(run({"simulate", "--profile", "9:10+8lone", "--alpha", "1/2", "--p", "1/4"}).code,
            gcg::cli::kResourceCeiling);
}
