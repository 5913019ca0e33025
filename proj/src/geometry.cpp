#include "qcover/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

// Linear part of each transform acting on doubled centered coordinates
// (X, Y) = (2x - o, 2y - o), o = 1 on even boards. Row-major 2x2.
using Mat = std::array<int, 4>;

constexpr std::array<Mat, 8> kMatrices = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 0},   // rot90
    {-1, 0, 0, -1},  // rot180
    {0, 1, -1, 0},   // rot270
    {-1, 0, 0, 1},   // mirror x
    {1, 0, 0, -1},   // mirror y
    {0, 1, 1, 0},    // diagonal
    {0, -1, -1, 0},  // anti-diagonal
}};

constexpr Mat multiply(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Transform from_matrix(const Mat& m) {
  for (std::size_t i = 0; i < kMatrices.size(); ++i) {
    if (kMatrices[i] == m) return static_cast<Transform>(i);
  }
  throw InvariantBreach("matrix is not an element of D4");
}

// Distance from v to the interval [0, 1].
int axis_distance_even(int v) { return std::max({0, -v, v - 1}); }

}  // namespace

std::string to_string(Square s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

Board::Board(int n) : n_(n) {
  if (n < 1) throw InvalidBoard("board side must be >= 1, got " + std::to_string(n));
  // floor((2-n)/2) with floor semantics for negative numerators.
  const int num = 2 - n;
  lo_ = num >= 0 ? num / 2 : -((-num + 1) / 2);
  hi_ = n / 2;
}

std::vector<Square> Board::squares() const {
  std::vector<Square> out;
  out.reserve(static_cast<std::size_t>(area()));
  for (int i = 0; i < area(); ++i) out.push_back(at(i));
  return out;
}

std::vector<Square> border_squares(const Board& b) {
  if (b.n() < 2) throw InvalidBoard("border needs n >= 2, got " + std::to_string(b.n()));
  std::vector<Square> out;
  out.reserve(static_cast<std::size_t>(4 * b.n() - 4));
  if (b.n() == 2) return b.squares();
  const Board inner(b.n() - 2);
  for (const Square s : b.squares()) {
    if (!inner.contains(s)) out.push_back(s);
  }
  return out;
}

int chebyshev_center_distance(const Board& b, Square s) {
  if (!b.contains(s)) throw DomainError("square " + to_string(s) + " is off board " + std::to_string(b.n()));
  if (!b.even()) return std::max(std::abs(s.x), std::abs(s.y));
  return std::max(axis_distance_even(s.x), axis_distance_even(s.y));
}

std::string to_string(Transform t) {
  switch (t) {
    case Transform::kIdentity: return "identity";
    case Transform::kRot90: return "rot90";
    case Transform::kRot180: return "rot180";
    case Transform::kRot270: return "rot270";
    case Transform::kMirrorX: return "mirror-x";
    case Transform::kMirrorY: return "mirror-y";
    case Transform::kMirrorDiag: return "mirror-diag";
    case Transform::kMirrorAntiDiag: return "mirror-antidiag";
  }
  return "?";
}

Square apply_transform_unchecked(Transform t, const Board& b, Square s) {
  const int o = b.even() ? 1 : 0;
  const Mat& m = kMatrices[static_cast<std::size_t>(t)];
  const int X = 2 * s.x - o;
  const int Y = 2 * s.y - o;
  const int X2 = m[0] * X + m[1] * Y;
  const int Y2 = m[2] * X + m[3] * Y;
  return {(X2 + o) / 2, (Y2 + o) / 2};
}

Square apply_transform(Transform t, const Board& b, Square s) {
  if (!b.contains(s)) throw DomainError("square " + to_string(s) + " is off board " + std::to_string(b.n()));
  return apply_transform_unchecked(t, b, s);
}

Transform compose(Transform a, Transform b) {
  return from_matrix(multiply(kMatrices[static_cast<std::size_t>(a)],
                              kMatrices[static_cast<std::size_t>(b)]));
}

Transform inverse(Transform t) {
  for (const Transform u : kAllTransforms) {
    if (compose(t, u) == Transform::kIdentity) return u;
  }
  throw InvariantBreach("transform without inverse");
}

}  // namespace qcover
