#pragma once

// Named reference configurations and their centered placement.

#include <cstdint>
#include <vector>

#include "qcover/configuration.hpp"
#include "qcover/geometry.hpp"

namespace qcover {

// Queens up to translation: offsets with min x = min y = 0.
class Pattern {
 public:
  Pattern() = default;
  // Translates c so its bounding box starts at (0,0).
  explicit Pattern(const Configuration& c);

  const Configuration& offsets() const { return offsets_; }
  int size() const { return offsets_.size(); }
  int width() const { return width_; }
  int height() const { return height_; }

  Configuration placed_at(Square origin) const { return offsets_.translated(origin); }

  bool fits_box(int w, int h) const { return width_ <= w && height_ <= h; }
  // Fits a w x h box in either orientation.
  bool fits_rectangle(int w, int h) const { return fits_box(w, h) || fits_box(h, w); }

  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.offsets_ <=> b.offsets_; }
  friend bool operator==(const Pattern& a, const Pattern& b) { return a.offsets_ == b.offsets_; }

 private:
  Configuration offsets_;
  int width_ = 0;
  int height_ = 0;
};

// {(-1,0), (0,2), (1,-1), (2,1)}: four queens pairwise a knight's move apart.
Configuration knight_square_configuration();
Pattern knight_square();

struct StairsCandidate {
  Square shift;
  std::int64_t inloss = 0;
  std::int64_t cenloss_odd = 0;
  std::int64_t cenloss_even = 0;
  std::int64_t total_odd() const { return inloss + cenloss_odd; }
  std::int64_t total_even() const { return inloss + cenloss_even; }
};

struct Stairs {
  int q = 0;
  Pattern pattern;
  StairsCandidate chosen;
  // Both evaluated row offsets, for inspection.
  std::vector<StairsCandidate> candidates;
};

// Two knight-step sequences (i, 2i): the first with ceil(q/2) queens, the
// second a copy of its first floor(q/2) queens moved one row up or down and
// pushed right by the least distance leaving all queens non-attacking. Of the
// two row offsets the one with smaller odd-board total loss wins, then smaller
// odd-board centralized loss, then the upward offset. Throws DomainError for
// q < 2.
Stairs stairs(int q);

// Every translation of p onto b that minimizes centralized loss, sorted.
// Throws DoesNotFit when p's bounding box exceeds the board.
std::vector<Configuration> centralize(const Pattern& p, const Board& b);

// Minimal centralized loss of p on a board of the given side parity that is
// large enough not to constrain placement.
std::int64_t min_cenloss(const Pattern& p, bool even_side);

// The central q x (q+1) rectangle R_q, inclusive bounds.
struct Rect {
  int xlo, xhi, ylo, yhi;
  int width() const { return xhi - xlo + 1; }
  int height() const { return yhi - ylo + 1; }
  bool contains(Square s) const { return s.x >= xlo && s.x <= xhi && s.y >= ylo && s.y <= yhi; }
};
Rect central_rectangle(int q);

}  // namespace qcover
