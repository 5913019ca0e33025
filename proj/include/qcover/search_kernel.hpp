#pragma once

// Exact maximum-cover search over q-subsets of a candidate square list.
//
// branch_and_bound is the production kernel: depth-first over subsets in
// candidate order, sharded on the first queen across OpenMP threads. A node
// with partial cover c and r queens still to place is pruned when
//
//   c + (sum of the r largest marginal covers among later candidates)
//
// falls strictly below the incumbent. Marginals only shrink as queens are
// added, so the bound is admissible and every maximizer survives. Ties with
// the incumbent are kept; the final answer is every subset attaining the
// global maximum, independent of thread count and scheduling.
//
// brute_force is the serial reference: plain enumeration, no pruning.

#include <cstdint>
#include <limits>
#include <vector>

#include "qcover/coverage.hpp"

namespace qcover::kernel {

struct Problem {
  const CoverMasks* masks = nullptr;
  // Board indices in search order. Ordering affects speed only.
  std::vector<int> candidates;
  int q = 0;
  // Skip subsets containing an attacking pair.
  bool nonattacking = false;
  // A cover value known to be attained by some subset in the search space.
  // Only used to seed pruning; 0 means none.
  int attained_hint = 0;
  // Abort with BudgetExceeded once this many nodes have been visited.
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
};

struct Result {
  // -1 if no feasible subset exists.
  int max_cover = -1;
  // Each maximizer as sorted board indices; the list itself is sorted.
  std::vector<std::vector<int>> maximizers;
  std::uint64_t nodes = 0;
};

Result branch_and_bound(const Problem& problem, int workers);

Result brute_force(const Problem& problem);

// Cover of the greedy completion (largest marginal first), or 0 if greedy
// dead-ends before placing q queens.
int greedy_cover(const Problem& problem);

}  // namespace qcover::kernel
