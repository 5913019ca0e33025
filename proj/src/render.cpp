#include "qcover/render.hpp"

#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"

namespace qcover {

std::string render_board(const Configuration& c, const Board& b, Annotate annotate) {
  if (!c.feasible_on(b)) throw DomainError("configuration " + to_string(c) + " is not on B_" + std::to_string(b.n()));
  const AttackField field = attack_field(c, b);
  std::string out;
  for (int y = b.hi(); y >= b.lo(); --y) {
    out += y == 0 ? "0 " : "  ";
    for (int x = b.lo(); x <= b.hi(); ++x) {
      const Square s{x, y};
      char cell = '.';
      if (field.occupied(s)) {
        cell = 'Q';
      } else if (annotate == Annotate::kAttackNumbers && field.at(s) >= 2) {
        cell = field.at(s) > 9 ? '+' : static_cast<char>('0' + field.at(s));
      }
      out += cell;
      if (x != b.hi()) out += ' ';
    }
    out += '\n';
  }
  out += std::string(static_cast<std::size_t>(2 + 2 * (0 - b.lo())), ' ') + "0\n";
  return out;
}

}  // namespace qcover
