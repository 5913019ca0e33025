#include "qcover/coverage.hpp"

#include <algorithm>
#include <bit>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

// Calls fn(s) for each on-board square attacked by a queen at q. Works for
// queens off the board: only the four lines through q matter.
template <typename Fn>
void for_each_attacked(const Board& b, Square q, Fn&& fn) {
  const int lo = b.lo();
  const int hi = b.hi();
  if (q.y >= lo && q.y <= hi) {
    for (int x = lo; x <= hi; ++x)
      if (x != q.x) fn(Square{x, q.y});
  }
  if (q.x >= lo && q.x <= hi) {
    for (int y = lo; y <= hi; ++y)
      if (y != q.y) fn(Square{q.x, y});
  }
  // x - y = d
  const int d = q.x - q.y;
  for (int x = std::max(lo, lo + d); x <= std::min(hi, hi + d); ++x)
    if (x != q.x) fn(Square{x, x - d});
  // x + y = a
  const int a = q.x + q.y;
  for (int x = std::max(lo, a - hi); x <= std::min(hi, a - lo); ++x)
    if (x != q.x) fn(Square{x, a - x});
}

}  // namespace

bool is_nonattacking(const Configuration& c) {
  const auto qs = c.queens();
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (attacks(qs[i], qs[j])) return false;
  return true;
}

AttackField::AttackField(Board board, std::vector<int> counts, std::vector<bool> occupied)
    : board_(board), counts_(std::move(counts)), occupied_(std::move(occupied)) {
  if (counts_.size() != static_cast<std::size_t>(board_.area()) || occupied_.size() != counts_.size())
    throw InvariantBreach("attack field size does not match board");
}

int AttackField::covered() const {
  int total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0 || occupied_[i]) ++total;
  return total;
}

int AttackField::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

int AttackField::squares_with(int k) const {
  return static_cast<int>(std::count(counts_.begin(), counts_.end(), k));
}

AttackField attack_field(const Configuration& c, const Board& b) {
  std::vector<int> counts(static_cast<std::size_t>(b.area()), 0);
  std::vector<bool> occupied(counts.size(), false);
  for (const Square q : c) {
    if (b.contains(q)) occupied[static_cast<std::size_t>(b.index(q))] = true;
    for_each_attacked(b, q, [&](Square s) { ++counts[static_cast<std::size_t>(b.index(s))]; });
  }
  return AttackField(b, std::move(counts), std::move(occupied));
}

int cover_count(const Configuration& c, const Board& b) { return attack_field(c, b).covered(); }

CoverMasks::CoverMasks(const Board& b)
    : board_(b), words_((b.area() + 63) / 64) {
  masks_.assign(static_cast<std::size_t>(b.area()) * static_cast<std::size_t>(words_), 0);
  solo_.assign(static_cast<std::size_t>(b.area()), 0);
  for (int i = 0; i < b.area(); ++i) {
    std::uint64_t* m = masks_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
    auto set = [&](Square s) {
      const int j = b.index(s);
      m[j / 64] |= std::uint64_t{1} << (j % 64);
    };
    const Square q = b.at(i);
    set(q);
    for_each_attacked(b, q, set);
    int pc = 0;
    for (int w = 0; w < words_; ++w) pc += std::popcount(m[w]);
    solo_[static_cast<std::size_t>(i)] = pc;
  }
}

}  // namespace qcover
