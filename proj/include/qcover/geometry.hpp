#pragma once

// Centered board coordinates.
//
// Board B_n uses coordinates floor((2-n)/2) .. floor(n/2) on both axes, so an
// odd board is symmetric about (0,0) and an even board about (0.5,0.5), with
// (0,0) the lower-left of the four central squares. Squares are plain integer
// pairs; on-board membership is a predicate, since attack lines leave the
// board and must stay representable.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qcover {

struct Square {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Square&, const Square&) = default;
  friend constexpr Square operator+(Square a, Square b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Square operator-(Square a, Square b) { return {a.x - b.x, a.y - b.y}; }
};

std::string to_string(Square s);

enum class Parity : std::uint8_t { kEven, kOdd };

// Even iff x - y is even.
constexpr Parity parity_of(Square s) {
  return ((s.x - s.y) % 2 == 0) ? Parity::kEven : Parity::kOdd;
}

class Board {
 public:
  // Throws InvalidBoard for n < 1.
  explicit Board(int n);

  int n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool even() const { return n_ % 2 == 0; }
  int area() const { return n_ * n_; }

  bool contains(Square s) const {
    return s.x >= lo_ && s.x <= hi_ && s.y >= lo_ && s.y <= hi_;
  }

  // Row-major dense index, (lo,lo) -> 0. Square must be on board.
  int index(Square s) const { return (s.y - lo_) * n_ + (s.x - lo_); }
  Square at(int index) const { return {lo_ + index % n_, lo_ + index / n_}; }

  // All squares in index order.
  std::vector<Square> squares() const;

  friend bool operator==(const Board& a, const Board& b) { return a.n_ == b.n_; }

 private:
  int n_;
  int lo_;
  int hi_;
};

// b_n = B_n \ B_{n-2}. Throws InvalidBoard for n < 2.
std::vector<Square> border_squares(const Board& b);

// Chebyshev distance to the nearest central square: (0,0) on odd boards, the
// 2x2 block {0,1}^2 on even boards. Throws DomainError off board.
int chebyshev_center_distance(const Board& b, Square s);

// The dihedral group acting on a board about its geometric center.
enum class Transform : std::uint8_t {
  kIdentity,
  kRot90,
  kRot180,
  kRot270,
  kMirrorX,         // x -> -x
  kMirrorY,         // y -> -y
  kMirrorDiag,      // (x,y) -> (y,x)
  kMirrorAntiDiag,  // (x,y) -> (-y,-x)
};

inline constexpr std::array<Transform, 8> kAllTransforms = {
    Transform::kIdentity, Transform::kRot90,   Transform::kRot180,     Transform::kRot270,
    Transform::kMirrorX,  Transform::kMirrorY, Transform::kMirrorDiag, Transform::kMirrorAntiDiag,
};

std::string to_string(Transform t);

// Image of s under t on board b. Throws DomainError if s is off board.
Square apply_transform(Transform t, const Board& b, Square s);

// Same map without the membership check; valid for any integer square.
Square apply_transform_unchecked(Transform t, const Board& b, Square s);

// (compose(a, b))(s) == a(b(s)).
Transform compose(Transform a, Transform b);
Transform inverse(Transform t);

}  // namespace qcover
