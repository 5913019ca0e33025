#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qcover/geometry.hpp"

namespace qcover {

// A finite set of queens, stored in lexicographic (x, then y) order so that
// equal sets compare equal structurally.
class Configuration {
 public:
  Configuration() = default;
  // Sorts the input. Throws DomainError on duplicate squares.
  explicit Configuration(std::vector<Square> queens);
  Configuration(std::initializer_list<Square> queens);

  std::span<const Square> queens() const { return queens_; }
  int size() const { return static_cast<int>(queens_.size()); }
  bool empty() const { return queens_.empty(); }
  bool contains(Square s) const;

  int even_count() const { return even_; }
  int odd_count() const { return size() - even_; }

  // Max Chebyshev distance of any queen from the center of b. All queens must
  // be on b (DomainError otherwise). 0 for the empty configuration.
  int radius(const Board& b) const;

  bool feasible_on(const Board& b) const;

  Configuration translated(Square by) const;
  Configuration transformed(Transform t, const Board& b) const;

  auto begin() const { return queens_.begin(); }
  auto end() const { return queens_.end(); }

  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    return a.queens_ <=> b.queens_;
  }
  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.queens_ == b.queens_;
  }

 private:
  std::vector<Square> queens_;
  int even_ = 0;
};

std::string to_string(const Configuration& c);

// Parses "(x,y);(x,y);..." with whitespace ignored. Empty string -> empty
// configuration. Throws ParseError naming the byte offset.
Configuration parse_configuration(const std::string& text);

}  // namespace qcover
