#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "gcg/errors.hpp"
#include "gcg/verify.hpp"

using namespace gcg;

TEST(Verify, SuiteNamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_THROW(parse_suite("nope"), std::invalid_argument);
}

TEST(Verify, GridParsing) {
  EXPECT_EQ(default_grid().size(), 6u);
  const auto grid = parse_grid("1/2:1/4,1:0.9");
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[1], GameParams(Rational(1), Rational(9, 10)));
  EXPECT_THROW(parse_grid("1/2"), std::invalid_argument);
  EXPECT_THROW(parse_grid("1/2:1"), std::invalid_argument);
  EXPECT_THROW(parse_grid(""), std::invalid_argument);
}

TEST(Verify, GridStraddlesTheOrdinaryBoundary) {
  int high = 0;
  int low = 0;
  bool boundary = false;
  for (const auto& params : default_grid()) {
    (params.high_cost() ? high : low) += 1;
    boundary |= params.alpha() + 2 * params.p() == Rational(2);
  }
  EXPECT_GT(high, 0);
  EXPECT_GT(low, 0);
  EXPECT_TRUE(boundary);
}

TEST(Verify, PassingSuites) {
  const auto grid = default_grid();
  for (Suite s : {Suite::KStar, Suite::LemmaSlope}) {
    const auto report = verify_bounds(s, 1, 12, grid);
    EXPECT_FALSE(report.rows.empty());
    EXPECT_TRUE(report.all_pass()) << to_string(s);
  }
  for (Suite s : {Suite::Ordinary, Suite::LemmaB, Suite::LemmaLine2p, Suite::Thm2Regret}) {
    const auto report = verify_bounds(s, 1, 6, grid);
    EXPECT_FALSE(report.rows.empty());
    EXPECT_TRUE(report.all_pass()) << to_string(s);
  }
  EXPECT_TRUE(verify_bounds(Suite::OracleBestResponse, 1, 3, grid).all_pass());
}

TEST(Verify, ReportsKnownCounterexample) {
  const auto grid = parse_grid("1:9/10");
  const auto report = verify_bounds(Suite::LemmaSparseMid, 6, 6, grid);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_FALSE(report.rows[0].pass);
  EXPECT_EQ(report.rows[0].k, 13);
  EXPECT_EQ(report.rows[0].lhs, "10.8");
  EXPECT_EQ(report.rows[0].rhs, "8.8");
}

TEST(Verify, CsvLayout) {
  const auto report = verify_bounds(Suite::KStar, 1, 1, parse_grid("1/2:1/4"));
  std::ostringstream out;
  write_csv(out, report);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("suite,case_id,m,alpha,p,k,lhs,rhs,pass\n", 0), 0u);
  EXPECT_NE(text.find("kstar,0,"), std::string::npos);
}

TEST(Verify, Limits) {
  const auto grid = default_grid();
  EXPECT_THROW(verify_bounds(Suite::LemmaB, 1, suite_ceiling(Suite::LemmaB) + 1, grid), ResourceError);
  EXPECT_THROW(verify_bounds(Suite::LemmaB, 3, 2, grid), std::domain_error);
  EXPECT_THROW(verify_bounds(Suite::LemmaB, 0, 2, grid), std::domain_error);
}
