#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qcover/errors.hpp"
#include "qcover/geometry.hpp"

using namespace qcover;

TEST(Board, CoordinateRanges) {
  EXPECT_EQ(Board(1).lo(), 0);
  EXPECT_EQ(Board(1).hi(), 0);
  EXPECT_EQ(Board(2).lo(), 0);
  EXPECT_EQ(Board(2).hi(), 1);
  EXPECT_EQ(Board(3).lo(), -1);
  EXPECT_EQ(Board(3).hi(), 1);
  EXPECT_EQ(Board(8).lo(), -3);
  EXPECT_EQ(Board(8).hi(), 4);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(Board(n).lo(), oracle::lo(n));
    EXPECT_EQ(Board(n).hi(), oracle::hi(n));
    EXPECT_EQ(Board(n).hi() - Board(n).lo() + 1, n);
  }
}

TEST(Board, RejectsNonPositiveSide) {
  EXPECT_THROW(Board(0), InvalidBoard);
  EXPECT_THROW(Board(-3), InvalidBoard);
}

TEST(Board, IndexRoundTrip) {
  for (int n : {1, 2, 7, 10}) {
    const Board b(n);
    const auto squares = b.squares();
    ASSERT_EQ(static_cast<int>(squares.size()), b.area());
    for (int i = 0; i < b.area(); ++i) {
      EXPECT_EQ(b.index(squares[static_cast<std::size_t>(i)]), i);
      EXPECT_EQ(b.at(i), squares[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(Border, SizeIsFourNMinusFour) {
  for (int n = 2; n <= 40; ++n) {
    const Board b(n);
    const auto border = border_squares(b);
    EXPECT_EQ(static_cast<int>(border.size()), 4 * n - 4) << n;
    const std::set<Square> unique(border.begin(), border.end());
    EXPECT_EQ(unique.size(), border.size());
    for (const Square s : border) {
      EXPECT_TRUE(b.contains(s));
      if (n > 2) EXPECT_FALSE(Board(n - 2).contains(s));
    }
  }
  EXPECT_THROW(border_squares(Board(1)), InvalidBoard);
}

TEST(CenterDistance, MatchesNearestCentralSquare) {
  for (int n = 1; n <= 12; ++n) {
    const Board b(n);
    for (const Square s : b.squares()) EXPECT_EQ(chebyshev_center_distance(b, s), oracle::center_distance(n, s));
  }
  EXPECT_THROW(chebyshev_center_distance(Board(3), {2, 0}), DomainError);
}

TEST(Transform, BijectsEveryBoard) {
  for (int n = 1; n <= 40; ++n) {
    const Board b(n);
    const auto squares = b.squares();
    const std::set<Square> all(squares.begin(), squares.end());
    for (const Transform t : kAllTransforms) {
      std::set<Square> image;
      for (const Square s : squares) image.insert(apply_transform(t, b, s));
      EXPECT_EQ(image, all) << "n=" << n << " t=" << to_string(t);
    }
  }
}

TEST(Transform, AgreesWithGeometricRotation) {
  for (int n : {1, 2, 5, 6, 9}) {
    const Board b(n);
    for (int t = 0; t < 8; ++t)
      for (const Square s : b.squares())
        EXPECT_EQ(apply_transform(kAllTransforms[static_cast<std::size_t>(t)], b, s), oracle::transform(t, n, s));
  }
}

TEST(Transform, CompositionTable) {
  for (int n : {5, 6}) {
    const Board b(n);
    for (const Transform a : kAllTransforms)
      for (const Transform c : kAllTransforms) {
        const Transform ac = compose(a, c);
        for (const Square s : b.squares())
          EXPECT_EQ(apply_transform(ac, b, s), apply_transform(a, b, apply_transform(c, b, s)));
      }
  }
  for (const Transform t : kAllTransforms) {
    EXPECT_EQ(compose(t, inverse(t)), Transform::kIdentity);
    EXPECT_EQ(compose(Transform::kIdentity, t), t);
  }
  EXPECT_EQ(compose(Transform::kRot90, Transform::kRot90), Transform::kRot180);
  EXPECT_EQ(compose(Transform::kMirrorX, Transform::kMirrorX), Transform::kIdentity);
}

TEST(Transform, OffBoardRejectedUnlessUnchecked) {
  const Board b(4);
  EXPECT_THROW(apply_transform(Transform::kRot90, b, {5, 5}), DomainError);
  EXPECT_EQ(apply_transform_unchecked(Transform::kRot180, b, {5, 5}), (Square{-4, -4}));
}

TEST(Parity, ByCoordinateDifference) {
  EXPECT_EQ(parity_of({0, 0}), Parity::kEven);
  EXPECT_EQ(parity_of({1, 2}), Parity::kOdd);
  EXPECT_EQ(parity_of({-1, 2}), Parity::kOdd);
  EXPECT_EQ(parity_of({-3, 5}), Parity::kEven);
}
