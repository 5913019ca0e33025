#pragma once

// Queen attack relations and cover counting.

#include <cstdint>
#include <span>
#include <vector>

#include "qcover/configuration.hpp"
#include "qcover/geometry.hpp"

namespace qcover {

// True iff a != b and they share a row, column or diagonal. A queen does not
// attack her own square.
constexpr bool attacks(Square a, Square b) {
  if (a == b) return false;
  const int dx = a.x - b.x;
  const int dy = a.y - b.y;
  return dx == 0 || dy == 0 || dx == dy || dx == -dy;
}

bool is_nonattacking(const Configuration& c);

// Attacking numbers a_C(s) over every square of a board. The occupant of a
// square does not count towards its own attacking number.
class AttackField {
 public:
  AttackField(Board board, std::vector<int> counts, std::vector<bool> occupied);

  const Board& board() const { return board_; }
  int at(Square s) const { return counts_[static_cast<std::size_t>(board_.index(s))]; }
  bool occupied(Square s) const { return occupied_[static_cast<std::size_t>(board_.index(s))]; }
  std::span<const int> counts() const { return counts_; }

  // Squares that are occupied or attacked at least once.
  int covered() const;
  int max_count() const;
  // Number of squares whose attacking number is exactly k.
  int squares_with(int k) const;

 private:
  Board board_;
  std::vector<int> counts_;
  std::vector<bool> occupied_;
};

// Queens may lie off board; only on-board squares are counted.
AttackField attack_field(const Configuration& c, const Board& b);

// |(C u A(C)) n B_n|.
int cover_count(const Configuration& c, const Board& b);

// Precomputed per-square cover bitboards (own square plus every attacked
// square) for one board. Bit i corresponds to Board::index.
class CoverMasks {
 public:
  explicit CoverMasks(const Board& b);

  const Board& board() const { return board_; }
  int words() const { return words_; }
  std::span<const std::uint64_t> mask(int index) const {
    return {masks_.data() + static_cast<std::size_t>(index) * static_cast<std::size_t>(words_),
            static_cast<std::size_t>(words_)};
  }
  // popcount of mask(index): the stand-alone cover of a queen there.
  int solo_cover(int index) const { return solo_[static_cast<std::size_t>(index)]; }

 private:
  Board board_;
  int words_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> solo_;
};

}  // namespace qcover
