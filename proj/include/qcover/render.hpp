#pragma once

#include <string>

#include "qcover/configuration.hpp"
#include "qcover/geometry.hpp"

namespace qcover {

enum class Annotate { kNone, kAttackNumbers };

// Text drawing of b, top row (largest y) first. Queens print as Q. With
// kAttackNumbers, empty squares attacked by two or more queens print their
// attacking number (+ above 9); everything else prints as '.'. The row y = 0
// carries a "0" label on the left and a last line marks column x = 0.
// Throws DomainError if c is not feasible on b.
std::string render_board(const Configuration& c, const Board& b, Annotate annotate = Annotate::kNone);

}  // namespace qcover
