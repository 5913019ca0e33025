#include "qcover/loss.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"

namespace qcover {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// The four attack lines through a square: row y, column x, diagonal x - y,
// anti-diagonal x + y.
enum class LineKind { kRow, kColumn, kDiagonal, kAntiDiagonal };

struct Line {
  LineKind kind;
  int value;
};

std::array<Line, 4> lines_through(Square s) {
  return {{{LineKind::kRow, s.y},
           {LineKind::kColumn, s.x},
           {LineKind::kDiagonal, s.x - s.y},
           {LineKind::kAntiDiagonal, s.x + s.y}}};
}

std::optional<Square> intersect(Line a, Line b) {
  if (a.kind == b.kind) return std::nullopt;
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) std::swap(a, b);
  switch (a.kind) {
    case LineKind::kRow:
      switch (b.kind) {
        case LineKind::kColumn: return Square{b.value, a.value};
        case LineKind::kDiagonal: return Square{a.value + b.value, a.value};
        case LineKind::kAntiDiagonal: return Square{b.value - a.value, a.value};
        default: break;
      }
      break;
    case LineKind::kColumn:
      if (b.kind == LineKind::kDiagonal) return Square{a.value, a.value - b.value};
      return Square{a.value, b.value - a.value};
    case LineKind::kDiagonal: {
      // x - y = d, x + y = s: needs d + s even
      const int sum = a.value + b.value;
      if (sum % 2 != 0) return std::nullopt;
      return Square{sum / 2, (b.value - a.value) / 2};
    }
    default: break;
  }
  return std::nullopt;
}

Configuration centered_bounding_box(const Configuration& c) {
  if (c.empty()) return c;
  int minx = c.queens()[0].x, maxx = minx, miny = c.queens()[0].y, maxy = miny;
  for (const Square s : c) {
    minx = std::min(minx, s.x);
    maxx = std::max(maxx, s.x);
    miny = std::min(miny, s.y);
    maxy = std::max(maxy, s.y);
  }
  const int w = maxx - minx;
  const int h = maxy - miny;
  return c.translated({-minx - w / 2, -miny - h / 2});
}

int max_abs_coord(const Configuration& c) {
  int r = 0;
  for (const Square s : c) r = std::max({r, std::abs(s.x), std::abs(s.y)});
  return r;
}

int span(const Configuration& c) {
  if (c.empty()) return 0;
  int minx = c.queens()[0].x, maxx = minx, miny = c.queens()[0].y, maxy = miny;
  for (const Square s : c) {
    minx = std::min(minx, s.x);
    maxx = std::max(maxx, s.x);
    miny = std::min(miny, s.y);
    maxy = std::max(maxy, s.y);
  }
  return std::max(maxx - minx, maxy - miny) + 1;
}

}  // namespace

std::int64_t inloss(const Configuration& c, const Board& b) {
  const AttackField field = attack_field(c, b);
  std::int64_t total = 0;
  for (const int a : field.counts())
    if (a >= 1) total += a - 1;
  return total;
}

int stable_evaluation_size(const Configuration& c) {
  const Configuration centered = centered_bounding_box(c);
  return std::max(6 * max_abs_coord(centered) + 1, 2 * span(c) + 9);
}

std::int64_t inloss_stable(const Configuration& c) {
  if (!is_nonattacking(c))
    throw UnboundedLoss("configuration " + to_string(c) + " has attacking queens; its internal loss grows with n");
  const Configuration centered = centered_bounding_box(c);
  const int n = stable_evaluation_size(c);
  const std::int64_t at_n = inloss(centered, Board(n));
  const std::int64_t at_n2 = inloss(centered, Board(n + 2));
  if (at_n != at_n2)
    throw InvariantBreach("internal loss not stable: " + std::to_string(at_n) + " at n=" + std::to_string(n) +
                          " vs " + std::to_string(at_n2) + " at n+2");
  return at_n;
}

std::int64_t cenloss_queen(Square s, const Board& b) {
  return (b.even() ? 1 : 0) + 2 * static_cast<std::int64_t>(chebyshev_center_distance(b, s));
}

std::int64_t cenloss(const Configuration& c, const Board& b) {
  std::int64_t total = 0;
  for (const Square s : c) total += cenloss_queen(s, b);
  return total;
}

std::vector<Square> line_crossings(const Configuration& c) {
  std::vector<Square> out;
  const auto qs = c.queens();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto li = lines_through(qs[i]);
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      const auto lj = lines_through(qs[j]);
      for (const Line a : li)
        for (const Line b : lj)
          if (auto p = intersect(a, b)) out.push_back(*p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool loss_is_stable(const Configuration& c, const Board& b) {
  if (!c.feasible_on(b) || !is_nonattacking(c)) return false;
  const auto crossings = line_crossings(c);
  return std::all_of(crossings.begin(), crossings.end(), [&](Square s) { return b.contains(s); });
}

int stable_board_size(const Configuration& c, bool even_side) {
  if (!is_nonattacking(c))
    throw UnboundedLoss("configuration " + to_string(c) + " has attacking queens; no stable board exists");
  std::vector<Square> points = line_crossings(c);
  points.insert(points.end(), c.begin(), c.end());
  int n = even_side ? 2 : 1;
  // Grow by two until every point fits; B_n and B_{n+2} share a center.
  while (!std::all_of(points.begin(), points.end(), [b = Board(n)](Square s) { return b.contains(s); })) n += 2;
  return n;
}

std::int64_t gamma(std::int64_t even, std::int64_t odd) {
  if (even < 0 || odd < 0) throw DomainError("parity counts must be non-negative");
  return 12 * choose2(even) + 12 * choose2(odd) + 10 * even * odd;
}

std::int64_t eta(const Configuration& c, const Board& b) {
  const AttackField field = attack_field(c, b);
  std::int64_t total = 0;
  for (const int a : field.counts())
    if (a >= 1) total += choose2(a) - (a - 1);
  return total;
}

std::int64_t quarter_squares(std::int64_t q) {
  if (q < 1) throw DomainError("quarter_squares needs q >= 1");
  return q * q / 4;
}

std::int64_t noncongruent_pairs(const Configuration& c) {
  return static_cast<std::int64_t>(c.even_count()) * c.odd_count();
}

LossBreakdown total_loss(const Configuration& c, const Board& b) {
  LossBreakdown out;
  out.inloss = inloss(c, b);
  out.cenloss = cenloss(c, b);
  out.total = out.inloss + out.cenloss;
  out.even = c.even_count();
  out.odd = c.odd_count();
  out.gamma = gamma(out.even, out.odd);
  out.eta = eta(c, b);
  out.stable = loss_is_stable(c, b);
  return out;
}

std::array<LossBreakdown, 2> loss_by_parity(const Configuration& c) {
  return {total_loss(c, Board(stable_board_size(c, false))),
          total_loss(c, Board(stable_board_size(c, true)))};
}

std::int64_t predicted_cover(const Configuration& c, const Board& b) {
  if (!loss_is_stable(c, b))
    throw NotStable("board " + std::to_string(b.n()) + " is too small for the loss/cover identity on " + to_string(c));
  const LossBreakdown loss = total_loss(c, b);
  return (4 * static_cast<std::int64_t>(b.n()) - 3) * c.size() - loss.total;
}

}  // namespace qcover
