#include <gtest/gtest.h>

#include "qcover/configuration.hpp"
#include "qcover/errors.hpp"

using namespace qcover;

TEST(Configuration, SortsQueens) {
  const Configuration c({{2, 1}, {-1, 0}, {0, 2}, {1, -1}});
  ASSERT_EQ(c.size(), 4);
  EXPECT_EQ(c.queens()[0], (Square{-1, 0}));
  EXPECT_EQ(c.queens()[3], (Square{2, 1}));
  EXPECT_TRUE(c.contains({0, 2}));
  EXPECT_FALSE(c.contains({0, 0}));
}

TEST(Configuration, RejectsDuplicates) {
  EXPECT_THROW(Configuration({{0, 0}, {1, 2}, {0, 0}}), DomainError);
}

TEST(Configuration, ParityCounts) {
  const Configuration c{{0, 0}, {1, 2}, {2, 2}, {3, 0}};
  EXPECT_EQ(c.even_count(), 2);
  EXPECT_EQ(c.odd_count(), 2);
}

TEST(Configuration, RadiusDependsOnBoardParity) {
  const Configuration c{{1, 1}, {-1, 0}};
  EXPECT_EQ(c.radius(Board(5)), 1);
  EXPECT_EQ(c.radius(Board(6)), 1);
  const Configuration far{{2, 0}};
  EXPECT_EQ(far.radius(Board(5)), 2);
  EXPECT_EQ(far.radius(Board(6)), 1);
  EXPECT_EQ(Configuration().radius(Board(3)), 0);
  EXPECT_THROW(far.radius(Board(3)), DomainError);
}

TEST(Configuration, Feasibility) {
  const Configuration c{{-1, -1}, {1, 1}};
  EXPECT_TRUE(c.feasible_on(Board(3)));
  EXPECT_FALSE(c.feasible_on(Board(2)));
}

TEST(Configuration, TranslateAndTransform) {
  const Configuration c{{0, 0}, {1, 2}};
  EXPECT_EQ(c.translated({1, -1}), (Configuration{{1, -1}, {2, 1}}));
  EXPECT_EQ(c.transformed(Transform::kRot90, Board(5)), (Configuration{{0, 0}, {-2, 1}}));
  EXPECT_EQ(c.transformed(Transform::kRot180, Board(6)), (Configuration{{1, 1}, {0, -1}}));
}

TEST(Configuration, Ordering) {
  EXPECT_LT((Configuration{{0, 0}}), (Configuration{{0, 1}}));
  EXPECT_EQ((Configuration{{1, 1}, {0, 0}}), (Configuration{{0, 0}, {1, 1}}));
}

TEST(ConfigurationText, RoundTrip) {
  const Configuration c{{-1, 0}, {0, 2}, {1, -1}, {2, 1}};
  EXPECT_EQ(to_string(c), "(-1,0);(0,2);(1,-1);(2,1)");
  EXPECT_EQ(parse_configuration(to_string(c)), c);
}

TEST(ConfigurationText, IgnoresWhitespace) {
  EXPECT_EQ(parse_configuration("  ( 1 , -2 ) ;\t(0,0) ; "), (Configuration{{0, 0}, {1, -2}}));
  EXPECT_TRUE(parse_configuration("").empty());
  EXPECT_TRUE(parse_configuration("   ").empty());
}

TEST(ConfigurationText, ErrorsNameOffset) {
  try {
    parse_configuration("(1,2);(3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 8U);
  }
  try {
    parse_configuration("(1,x)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3U);
  }
  EXPECT_THROW(parse_configuration("(1,2)(3,4)"), ParseError);
  EXPECT_THROW(parse_configuration("(0,0);(0,0)"), ParseError);
}
