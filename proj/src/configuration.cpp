#include "qcover/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "qcover/errors.hpp"

namespace qcover {

Configuration::Configuration(std::vector<Square> queens) : queens_(std::move(queens)) {
  std::sort(queens_.begin(), queens_.end());
  const auto dup = std::adjacent_find(queens_.begin(), queens_.end());
  if (dup != queens_.end()) throw DomainError("duplicate queen at " + to_string(*dup));
  even_ = static_cast<int>(std::count_if(queens_.begin(), queens_.end(),
                                         [](Square s) { return parity_of(s) == Parity::kEven; }));
}

Configuration::Configuration(std::initializer_list<Square> queens)
    : Configuration(std::vector<Square>(queens)) {}

bool Configuration::contains(Square s) const {
  return std::binary_search(queens_.begin(), queens_.end(), s);
}

int Configuration::radius(const Board& b) const {
  int r = 0;
  for (const Square s : queens_) r = std::max(r, chebyshev_center_distance(b, s));
  return r;
}

bool Configuration::feasible_on(const Board& b) const {
  return std::all_of(queens_.begin(), queens_.end(), [&](Square s) { return b.contains(s); });
}

Configuration Configuration::translated(Square by) const {
  std::vector<Square> out;
  out.reserve(queens_.size());
  for (const Square s : queens_) out.push_back(s + by);
  return Configuration(std::move(out));
}

Configuration Configuration::transformed(Transform t, const Board& b) const {
  std::vector<Square> out;
  out.reserve(queens_.size());
  for (const Square s : queens_) out.push_back(apply_transform(t, b, s));
  return Configuration(std::move(out));
}

std::string to_string(const Configuration& c) {
  std::string out;
  for (const Square s : c) {
    if (!out.empty()) out += ';';
    out += to_string(s);
  }
  return out;
}

namespace {

class ConfigParser {
 public:
  explicit ConfigParser(const std::string& text) : text_(text) {}

  Configuration parse() {
    std::vector<Square> queens;
    skip_ws();
    if (at_end()) return {};
    while (true) {
      queens.push_back(parse_square());
      skip_ws();
      if (at_end()) break;
      expect(';');
      skip_ws();
      // tolerate a trailing separator
      if (at_end()) break;
    }
    try {
      return Configuration(std::move(queens));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), pos_);
    }
  }

 private:
  Square parse_square() {
    expect('(');
    const int x = parse_int();
    expect(',');
    const int y = parse_int();
    expect(')');
    return {x, y};
  }

  int parse_int() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("configuration: " + what + " at byte " + std::to_string(pos_), pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Configuration parse_configuration(const std::string& text) { return ConfigParser(text).parse(); }

}  // namespace qcover
