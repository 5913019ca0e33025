#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcover/constructions.hpp"
#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/loss.hpp"

using namespace qcover;

namespace {

std::vector<Square> as_vector(const Configuration& c) { return {c.begin(), c.end()}; }

// Every non-attacking q-subset of the 10 x 10 window [-4, 5]^2.
template <typename F>
void for_each_window_subset(int q, F&& f) {
  std::vector<Square> window;
  for (int y = -4; y <= 5; ++y)
    for (int x = -4; x <= 5; ++x) window.push_back({x, y});
  std::vector<int> idx(static_cast<std::size_t>(q));
  std::vector<Square> chosen;
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == q) {
      f(chosen);
      return;
    }
    for (std::size_t i = start; i < window.size(); ++i) {
      const Square s = window[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Square c) { return attacks(c, s); })) continue;
      chosen.push_back(s);
      self(self, i + 1, depth + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
}

void expect_identity(const std::vector<Square>& qs) {
  const Configuration c(qs);
  const Board b(stable_board_size(c, false));
  ASSERT_EQ(inloss(c, b), gamma(c.even_count(), c.odd_count()) - eta(c, b)) << to_string(c);
}

}  // namespace

TEST(Inloss, PairLawExamples) {
  EXPECT_EQ(inloss(Configuration{{0, 0}, {1, 2}}, Board(20)), 10);
  EXPECT_EQ(inloss_stable(Configuration{{0, 0}, {1, 2}}), 10);
  EXPECT_EQ(inloss_stable(Configuration{{0, 0}, {1, 3}}), 12);
}

TEST(Inloss, KnightSquare) {
  EXPECT_EQ(inloss_stable(knight_square_configuration()), 48);
  EXPECT_EQ(eta(knight_square_configuration(), Board(12)), 16);
  EXPECT_EQ(gamma(2, 2), 64);
}

TEST(Inloss, AttackingIsUnbounded) {
  EXPECT_THROW(inloss_stable(Configuration{{0, 0}, {0, 3}}), UnboundedLoss);
  EXPECT_THROW(stable_board_size(Configuration{{0, 0}, {2, 2}}, false), UnboundedLoss);
}

TEST(Inloss, MatchesCrossingOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto qs = oracle::random_nonattacking(rng, 2 + static_cast<int>(rng() % 7), 6);
    ASSERT_EQ(inloss_stable(Configuration(qs)), oracle::inloss_unbounded(qs));
  }
}

TEST(Inloss, CrossingsAreTheOverlapSquares) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto qs = oracle::random_nonattacking(rng, 2 + static_cast<int>(rng() % 5), 5);
    const Configuration c(qs);
    const Board b(stable_board_size(c, false));
    const AttackField f = attack_field(c, b);
    std::set<Square> doubled;
    for (const Square s : b.squares())
      if (!f.occupied(s) && f.at(s) >= 2) doubled.insert(s);
    const auto crossings = line_crossings(c);
    std::set<Square> off_queens;
    for (const Square s : crossings)
      if (!c.contains(s)) off_queens.insert(s);
    ASSERT_EQ(doubled, off_queens);
  }
}

TEST(Cenloss, MatchesOracle) {
  for (int n = 1; n <= 11; ++n) {
    const Board b(n);
    for (const Square s : b.squares()) ASSERT_EQ(cenloss_queen(s, b), oracle::cenloss({s}, n));
  }
  EXPECT_EQ(cenloss(knight_square_configuration(), Board(9)), 12);
  EXPECT_THROW(cenloss_queen({9, 9}, Board(5)), DomainError);
}

TEST(Stability, NeedsEveryCrossingOnBoard) {
  const Configuration k = knight_square_configuration();
  EXPECT_TRUE(loss_is_stable(k, Board(12)));
  EXPECT_FALSE(loss_is_stable(Configuration{{0, 0}, {0, 1}}, Board(9)));
  const int odd = stable_board_size(k, false);
  const int even = stable_board_size(k, true);
  EXPECT_EQ(odd % 2, 1);
  EXPECT_EQ(even % 2, 0);
  EXPECT_TRUE(loss_is_stable(k, Board(odd)));
  EXPECT_FALSE(loss_is_stable(k, Board(odd - 2)));
  EXPECT_TRUE(loss_is_stable(k, Board(even)));
  EXPECT_FALSE(loss_is_stable(k, Board(even - 2)));
}

TEST(TotalLoss, Breakdown) {
  const LossBreakdown l = total_loss(knight_square_configuration(), Board(12));
  EXPECT_EQ(l.inloss, 48);
  EXPECT_EQ(l.cenloss, 12);
  EXPECT_EQ(l.total, 60);
  EXPECT_EQ(l.gamma, 64);
  EXPECT_EQ(l.eta, 16);
  EXPECT_EQ(l.even, 2);
  EXPECT_EQ(l.odd, 2);
  EXPECT_TRUE(l.stable);
  EXPECT_EQ(predicted_cover(knight_square_configuration(), Board(12)), 120);
  EXPECT_THROW(predicted_cover(knight_square_configuration(), Board(5)), NotStable);
}

TEST(Analytics, Formulas) {
  EXPECT_EQ(gamma(1, 1), 10);
  EXPECT_EQ(gamma(2, 0), 12);
  EXPECT_EQ(gamma(3, 2), 12 * 3 + 12 * 1 + 10 * 6);
  EXPECT_EQ(quarter_squares(1), 0);
  EXPECT_EQ(quarter_squares(4), 4);
  EXPECT_EQ(quarter_squares(7), 12);
  EXPECT_THROW(quarter_squares(0), DomainError);
  EXPECT_EQ(noncongruent_pairs(knight_square_configuration()), 4);
  EXPECT_EQ(eta(Configuration{{0, 0}, {1, 2}}, Board(21)), 0);
}

TEST(LossProperty, GammaEtaIdentityExhaustive) {
  long checked = 0;
  for (int q = 1; q <= 3; ++q)
    for_each_window_subset(q, [&](const std::vector<Square>& qs) {
      expect_identity(qs);
      ++checked;
    });
  EXPECT_GT(checked, 10000);
}

TEST(LossProperty, GammaEtaIdentityRandomized) {
  std::mt19937_64 rng(42);
  for (int q = 4; q <= 8; ++q)
    for (int trial = 0; trial < 10000; ++trial) {
      expect_identity(oracle::random_nonattacking(rng, q, -4, 5));
    }
}

TEST(LossProperty, EqualInlossMeansEqualGammaEtaDifference) {
  std::mt19937_64 rng(43);
  int pairs = 0;
  for (int trial = 0; trial < 2000 && pairs < 200; ++trial) {
    const int q = 3 + static_cast<int>(rng() % 3);
    const Configuration a(oracle::random_nonattacking(rng, q, 4));
    const Configuration b(oracle::random_nonattacking(rng, q, 4));
    if (inloss_stable(a) != inloss_stable(b)) continue;
    const Board ba(stable_board_size(a, false));
    const Board bb(stable_board_size(b, false));
    EXPECT_EQ(gamma(b.even_count(), b.odd_count()) - gamma(a.even_count(), a.odd_count()), eta(b, bb) - eta(a, ba));
    ++pairs;
  }
  EXPECT_GT(pairs, 20);
}

TEST(LossProperty, PairLawWithinRadiusEight) {
  int pairs = 0;
  for (int y = -8; y <= 8; ++y)
    for (int x = -8; x <= 8; ++x) {
      const Square s{x, y};
      if (attacks({0, 0}, s) || s == Square{0, 0}) continue;
      const Configuration c{{0, 0}, s};
      const std::int64_t expected = parity_of(s) == Parity::kEven ? 12 : 10;
      ASSERT_EQ(inloss_stable(c), expected) << to_string(c);
      ASSERT_EQ(inloss_stable(c), oracle::inloss_unbounded({{0, 0}, s}));
      ++pairs;
    }
  EXPECT_EQ(pairs, 17 * 17 - 1 - 4 * 16);
}

TEST(LossProperty, QuarterSquaresIsTheBalanceMaximum) {
  std::vector<Square> window;
  for (int y = -2; y <= 2; ++y)
    for (int x = -2; x <= 2; ++x) window.push_back({x, y});
  for (int q = 1; q <= 6; ++q) {
    std::int64_t best = -1;
    std::vector<bool> pick(window.size(), false);
    std::fill(pick.end() - q, pick.end(), true);
    do {
      std::vector<Square> qs;
      for (std::size_t i = 0; i < window.size(); ++i)
        if (pick[i]) qs.push_back(window[i]);
      best = std::max(best, noncongruent_pairs(Configuration(qs)));
    } while (std::next_permutation(pick.begin(), pick.end()));
    EXPECT_EQ(best, quarter_squares(q)) << "q=" << q;
  }
}

// Cover = (4n - 3) q - loss on any board holding every crossing.
TEST(LossProperty, CoverDualityOnStableBoards) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 7);
    const auto qs = oracle::random_nonattacking(rng, q, 4);
    const Configuration c(qs);
    const bool even = (rng() & 1U) != 0;
    const int n = stable_board_size(c, even) + 2 * static_cast<int>(rng() % 3);
    const Board b(n);
    ASSERT_TRUE(loss_is_stable(c, b));
    const std::int64_t predicted = static_cast<std::int64_t>(4 * n - 3) * q - total_loss(c, b).total;
    ASSERT_EQ(cover_count(c, b), predicted) << to_string(c) << " n=" << n;
    ASSERT_EQ(predicted_cover(c, b), predicted);
    ASSERT_EQ(oracle::cover(as_vector(c), n), predicted);
  }
}

TEST(LossByParity, UsesSmallestStableBoards) {
  const auto both = loss_by_parity(knight_square_configuration());
  EXPECT_EQ(both[0].inloss, 48);
  EXPECT_EQ(both[1].inloss, 48);
  EXPECT_TRUE(both[0].stable);
  EXPECT_TRUE(both[1].stable);
}
