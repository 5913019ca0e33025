#include <gtest/gtest.h>

#include "qcover/errors.hpp"
#include "qcover/search.hpp"

using namespace qcover;

TEST(NonAttackingThreshold, TwoThreeFourQueens) {
  EXPECT_EQ(nonattacking_threshold(2, 4, 14).n1_candidate, 9);
  EXPECT_EQ(nonattacking_threshold(3, 4, 14).n1_candidate, 8);
  EXPECT_EQ(nonattacking_threshold(4, 5, 13).n1_candidate, 10);
}

TEST(StabilizingThreshold, TwoQueens) {
  const ThresholdReport r = stabilizing_threshold(2, 6, 16);
  EXPECT_EQ(r.n2_candidate, 10);
  EXPECT_EQ(r.n2_even, 10);
  EXPECT_EQ(r.n2_odd, 11);
  EXPECT_EQ(r.n1_candidate, 9);
  ASSERT_EQ(r.points.size(), 11U);
  EXPECT_EQ(r.points.front().n, 6);
  EXPECT_NE(r.label.find("empirical"), std::string::npos);
}

TEST(StabilizingThreshold, ThreeQueens) { EXPECT_EQ(stabilizing_threshold(3, 6, 18).n2_candidate, 12); }

TEST(StabilizingThreshold, FourQueens) {
  const ThresholdReport r = stabilizing_threshold(4, 8, 20);
  EXPECT_EQ(r.n2_candidate, 15);
  EXPECT_EQ(r.n2_odd, 15);
  EXPECT_EQ(r.n2_even, 16);
  for (const auto& pt : r.points) {
    if (pt.n < 15) continue;
    EXPECT_EQ(pt.optimal_count, pt.n % 2 == 1 ? 8 : 10) << pt.n;
  }
}

TEST(Scan, PointsCarryPerBoardSummaries) {
  const ThresholdReport r = nonattacking_threshold(2, 8, 10);
  ASSERT_EQ(r.points.size(), 3U);
  EXPECT_FALSE(r.points[0].all_nonattacking);
  EXPECT_TRUE(r.points[1].all_nonattacking);
  EXPECT_EQ(r.points[2].max_cover, 60);
  EXPECT_EQ(r.points[2].optimal_count, 16);
  EXPECT_EQ(r.points[2].classes.size(), 2U);
}

TEST(Scan, WindowedLabelWarns) {
  SearchParams base;
  base.mode = SearchMode::kWindowed;
  const ThresholdReport r = nonattacking_threshold(2, 8, 10, base);
  EXPECT_NE(r.label.find("cannot rule out"), std::string::npos);
}

TEST(Scan, RejectsEmptyRange) { EXPECT_THROW(nonattacking_threshold(2, 10, 9), DomainError); }
