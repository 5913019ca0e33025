#pragma once

// Loss calculus: internal loss from overlapping attack lines, centralized
// loss from distance to the board center, and their sum, which on large
// enough boards determines cover exactly: cover = (4n - 3) q - loss.

#include <array>
#include <cstdint>
#include <vector>

#include "qcover/configuration.hpp"
#include "qcover/geometry.hpp"

namespace qcover {

struct LossBreakdown {
  std::int64_t inloss = 0;
  std::int64_t cenloss = 0;
  std::int64_t total = 0;
  std::int64_t gamma = 0;
  std::int64_t eta = 0;
  int even = 0;
  int odd = 0;
  // The board holds every line crossing of a non-attacking configuration, so
  // inloss equals its board-independent value and predicted_cover applies.
  bool stable = false;

  friend bool operator==(const LossBreakdown&, const LossBreakdown&) = default;
};

// Sum over attacked board squares of (a_C(s) - 1).
std::int64_t inloss(const Configuration& c, const Board& b);

// Board-independent internal loss of a non-attacking configuration. Evaluated
// on a board large enough to hold every crossing, then re-checked at n + 2.
// Throws UnboundedLoss for attacking configurations.
std::int64_t inloss_stable(const Configuration& c);

// Board side used by inloss_stable for c (after centering c's bounding box).
int stable_evaluation_size(const Configuration& c);

// 0 (odd n) or 1 (even n), plus 2 per Chebyshev unit from the center.
// Throws DomainError off board.
std::int64_t cenloss_queen(Square s, const Board& b);
std::int64_t cenloss(const Configuration& c, const Board& b);

// Every pairwise crossing point of the queens' attack lines, without
// multiplicity. For non-attacking c these are exactly the squares with
// a_C(s) >= 2 on an unbounded board.
std::vector<Square> line_crossings(const Configuration& c);

// c is non-attacking, feasible on b, and every line crossing lies on b.
bool loss_is_stable(const Configuration& c, const Board& b);

// Smallest board of the given parity (kEven = even side) on which c, taken
// at its current coordinates, is loss-stable. Throws UnboundedLoss if c is
// attacking.
int stable_board_size(const Configuration& c, bool even_side);

LossBreakdown total_loss(const Configuration& c, const Board& b);

// Breakdowns at c's own coordinates on the smallest stable odd and even
// boards: {odd, even}.
std::array<LossBreakdown, 2> loss_by_parity(const Configuration& c);

// Pair-crossing budget 12 C(e,2) + 12 C(o,2) + 10 e o.
std::int64_t gamma(std::int64_t even, std::int64_t odd);

// Overlap concentration: sum over attacked squares of C(a,2) - (a-1).
std::int64_t eta(const Configuration& c, const Board& b);

// floor(q^2 / 4). Throws DomainError for q < 1.
std::int64_t quarter_squares(std::int64_t q);

// e * o, the number of queen pairs of different parity.
std::int64_t noncongruent_pairs(const Configuration& c);

// (4n - 3) q - loss. Throws NotStable unless loss_is_stable(c, b).
std::int64_t predicted_cover(const Configuration& c, const Board& b);

}  // namespace qcover
