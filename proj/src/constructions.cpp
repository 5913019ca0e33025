#include "qcover/constructions.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/loss.hpp"

namespace qcover {

namespace {

struct Extent {
  int minx, maxx, miny, maxy;
};

Extent extent_of(const Configuration& c) {
  if (c.empty()) return {0, -1, 0, -1};
  Extent e{c.queens()[0].x, c.queens()[0].x, c.queens()[0].y, c.queens()[0].y};
  for (const Square s : c) {
    e.minx = std::min(e.minx, s.x);
    e.maxx = std::max(e.maxx, s.x);
    e.miny = std::min(e.miny, s.y);
    e.maxy = std::max(e.maxy, s.y);
  }
  return e;
}

StairsCandidate evaluate(const Configuration& c, Square shift) {
  const Pattern p(c);
  StairsCandidate out;
  out.shift = shift;
  out.inloss = inloss_stable(c);
  out.cenloss_odd = min_cenloss(p, false);
  out.cenloss_even = min_cenloss(p, true);
  return out;
}

}  // namespace

Pattern::Pattern(const Configuration& c) {
  const Extent e = extent_of(c);
  offsets_ = c.empty() ? c : c.translated({-e.minx, -e.miny});
  width_ = c.empty() ? 0 : e.maxx - e.minx + 1;
  height_ = c.empty() ? 0 : e.maxy - e.miny + 1;
}

Configuration knight_square_configuration() { return Configuration{{-1, 0}, {0, 2}, {1, -1}, {2, 1}}; }

Pattern knight_square() { return Pattern(knight_square_configuration()); }

Stairs stairs(int q) {
  if (q < 2) throw DomainError("stairs needs q >= 2, got " + std::to_string(q));
  std::vector<Square> first;
  for (int i = 0; i < (q + 1) / 2; ++i) first.push_back({i, 2 * i});
  const int second_size = q / 2;

  Stairs out;
  out.q = q;
  std::vector<Configuration> configs;
  for (const int dy : {1, -1}) {
    // The sequences stop interacting once dx exceeds the first sequence's
    // extent, so this loop terminates well before the bound.
    for (int dx = 1; dx <= 4 * q + 4; ++dx) {
      std::vector<Square> queens = first;
      for (int i = 0; i < second_size; ++i) queens.push_back(first[static_cast<std::size_t>(i)] + Square{dx, dy});
      Configuration c(std::move(queens));
      if (!is_nonattacking(c)) continue;
      out.candidates.push_back(evaluate(c, {dx, dy}));
      configs.push_back(std::move(c));
      break;
    }
  }
  if (out.candidates.empty()) throw InvariantBreach("no non-attacking stairs shift for q=" + std::to_string(q));

  std::size_t best = 0;
  for (std::size_t i = 1; i < out.candidates.size(); ++i) {
    const auto& a = out.candidates[i];
    const auto& b = out.candidates[best];
    if (std::tuple(a.total_odd(), a.cenloss_odd) < std::tuple(b.total_odd(), b.cenloss_odd)) best = i;
  }
  out.chosen = out.candidates[best];
  out.pattern = Pattern(configs[best]);
  return out;
}

std::vector<Configuration> centralize(const Pattern& p, const Board& b) {
  if (p.width() > b.n() || p.height() > b.n())
    throw DoesNotFit("pattern " + std::to_string(p.width()) + "x" + std::to_string(p.height()) +
                     " does not fit board " + std::to_string(b.n()));
  std::vector<Configuration> best;
  std::int64_t best_loss = std::numeric_limits<std::int64_t>::max();
  for (int oy = b.lo(); oy + p.height() - 1 <= b.hi(); ++oy) {
    for (int ox = b.lo(); ox + p.width() - 1 <= b.hi(); ++ox) {
      Configuration c = p.placed_at({ox, oy});
      const std::int64_t loss = cenloss(c, b);
      if (loss < best_loss) {
        best_loss = loss;
        best.clear();
      }
      if (loss == best_loss) best.push_back(std::move(c));
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::int64_t min_cenloss(const Pattern& p, bool even_side) {
  int n = 2 * std::max(p.width(), p.height()) + 1;
  if (even_side) ++n;
  const Board b(n);
  return cenloss(centralize(p, b).front(), b);
}

Rect central_rectangle(int q) {
  if (q < 1) throw DomainError("R_q needs q >= 1");
  if (q % 2 == 0) return {-q / 2 + 1, q / 2, -q / 2 + 1, q / 2 + 1};
  const int h = (q - 1) / 2;
  return {-h, h, -h, h + 1};
}

}  // namespace qcover
