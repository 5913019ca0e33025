#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/search_kernel.hpp"

using namespace qcover;

namespace {

kernel::Problem make_problem(const CoverMasks& masks, std::vector<int> candidates, int q, bool nonattacking) {
  kernel::Problem p;
  p.masks = &masks;
  p.candidates = std::move(candidates);
  p.q = q;
  p.nonattacking = nonattacking;
  return p;
}

std::vector<int> all_indices(const Board& b) {
  std::vector<int> out(static_cast<std::size_t>(b.area()));
  for (int i = 0; i < b.area(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

// Max cover over index subsets computed straight from the per-square oracle.
int oracle_max(const Board& b, const std::vector<int>& cand, int q, bool nonattacking) {
  int best = -1;
  std::vector<Square> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == q) {
      if (!nonattacking || oracle::nonattacking(chosen)) best = std::max(best, oracle::cover(chosen, b.n()));
      return;
    }
    for (std::size_t i = start; i < cand.size(); ++i) {
      chosen.push_back(b.at(cand[i]));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST(Kernel, BruteForceMatchesOracle) {
  for (int n = 3; n <= 6; ++n) {
    const Board b(n);
    const CoverMasks masks(b);
    for (int q = 1; q <= 3; ++q)
      for (const bool na : {false, true}) {
        const auto r = kernel::brute_force(make_problem(masks, all_indices(b), q, na));
        EXPECT_EQ(r.max_cover, oracle_max(b, all_indices(b), q, na)) << n << " " << q << " " << na;
      }
  }
}

TEST(Kernel, BranchAndBoundMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Board b(n);
    const CoverMasks masks(b);
    auto cand = all_indices(b);
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(std::min<std::size_t>(cand.size(), 10 + rng() % 15));
    const int q = 1 + static_cast<int>(rng() % 4);
    const bool na = (rng() & 1U) != 0;
    const auto problem = make_problem(masks, cand, q, na);
    const auto expected = kernel::brute_force(problem);
    for (const int workers : {1, 3}) {
      const auto got = kernel::branch_and_bound(problem, workers);
      ASSERT_EQ(got.max_cover, expected.max_cover) << "trial " << trial;
      ASSERT_EQ(got.maximizers, expected.maximizers) << "trial " << trial;
    }
  }
}

TEST(Kernel, PrunesButKeepsAllTies) {
  const Board b(10);
  const CoverMasks masks(b);
  const auto problem = make_problem(masks, all_indices(b), 2, false);
  const auto bb = kernel::branch_and_bound(problem, 1);
  const auto bf = kernel::brute_force(problem);
  EXPECT_EQ(bb.max_cover, 60);
  EXPECT_EQ(bb.maximizers.size(), 16U);
  EXPECT_EQ(bb.maximizers, bf.maximizers);
  EXPECT_LT(bb.nodes, bf.nodes);
}

TEST(Kernel, HintDoesNotChangeResult) {
  const Board b(8);
  const CoverMasks masks(b);
  auto problem = make_problem(masks, all_indices(b), 3, true);
  const auto plain = kernel::branch_and_bound(problem, 1);
  problem.attained_hint = plain.max_cover;
  const auto hinted = kernel::branch_and_bound(problem, 2);
  EXPECT_EQ(hinted.max_cover, plain.max_cover);
  EXPECT_EQ(hinted.maximizers, plain.maximizers);
}

TEST(Kernel, UnattainableHintIsABreach) {
  const Board b(6);
  const CoverMasks masks(b);
  auto problem = make_problem(masks, all_indices(b), 2, false);
  problem.attained_hint = 1000;
  EXPECT_THROW(kernel::branch_and_bound(problem, 1), InvariantBreach);
}

TEST(Kernel, NoFeasibleSubset) {
  const Board b(2);
  const CoverMasks masks(b);
  const auto r = kernel::branch_and_bound(make_problem(masks, all_indices(b), 2, true), 1);
  EXPECT_EQ(r.max_cover, -1);
  EXPECT_TRUE(r.maximizers.empty());
}

TEST(Kernel, NodeBudget) {
  const Board b(12);
  const CoverMasks masks(b);
  auto problem = make_problem(masks, all_indices(b), 4, false);
  problem.node_budget = 50;
  EXPECT_THROW(kernel::branch_and_bound(problem, 1), BudgetExceeded);
}

TEST(Kernel, GreedyIsALowerBound) {
  for (int n = 5; n <= 12; ++n) {
    const Board b(n);
    const CoverMasks masks(b);
    const auto problem = make_problem(masks, all_indices(b), 3, true);
    EXPECT_LE(kernel::greedy_cover(problem), kernel::branch_and_bound(problem, 1).max_cover);
  }
}
