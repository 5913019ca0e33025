#include "qcover/search.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <limits>
#include <map>
#include <numeric>

#include "qcover/constructions.hpp"
#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/loss.hpp"
#include "qcover/search_kernel.hpp"

namespace qcover {

namespace {

double binomial(double n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Board indices of `squares`, most central first (largest solo cover), ties
// by index. Central-first order tightens the kernel's bound early.
std::vector<int> search_order(const CoverMasks& masks, const std::vector<Square>& squares) {
  std::vector<int> idx;
  idx.reserve(squares.size());
  for (const Square s : squares) idx.push_back(masks.board().index(s));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const int ca = masks.solo_cover(a);
    const int cb = masks.solo_cover(b);
    return ca != cb ? ca > cb : a < b;
  });
  return idx;
}

std::vector<Configuration> to_configurations(const Board& b, const std::vector<std::vector<int>>& sets) {
  std::vector<Configuration> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<Square> queens;
    queens.reserve(set.size());
    for (const int i : set) queens.push_back(b.at(i));
    out.emplace_back(std::move(queens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Recomputes every optimum from scratch and checks the class partition.
void check_optimal_set(const OptimalSet& set, const Board& b) {
  int orbit_total = 0;
  for (const auto& cls : set.classes) {
    if (cls.orbit_size * cls.stabilizer_order != 8) throw InvariantBreach("orbit-stabilizer mismatch");
    orbit_total += cls.orbit_size;
  }
  if (orbit_total != static_cast<int>(set.configurations.size()))
    throw InvariantBreach("optimal set is not closed under board symmetry");
  for (const auto& c : set.configurations) {
    const AttackField field = attack_field(c, b);
    if (field.covered() != set.max_cover)
      throw InvariantBreach("optimum " + to_string(c) + " recomputes to " + std::to_string(field.covered()));
    if (is_nonattacking(c) && field.max_count() > 4)
      throw InvariantBreach("non-attacking configuration with attacking number above 4: " + to_string(c));
  }
}

OptimalSet assemble(const SearchParams& params, const Board& b, const kernel::Result& result, int box) {
  OptimalSet out;
  out.params = params;
  out.max_cover = result.max_cover;
  out.configurations = to_configurations(b, result.maximizers);
  out.classes = fundamental_classes(out.configurations, b);
  out.searched_box = box;
  check_optimal_set(out, b);
  return out;
}

bool touches_box_edge(const std::vector<Configuration>& configs, const Board& b, int side) {
  // Box of side `side` shares parity with b, so its Chebyshev radius is
  // (side - 1) / 2 on odd boards and side / 2 - 1 on even boards.
  const int radius = b.even() ? side / 2 - 1 : (side - 1) / 2;
  for (const auto& c : configs)
    for (const Square s : c)
      if (chebyshev_center_distance(b, s) == radius) return true;
  return false;
}

int stairs_hint(const SearchParams& params, const Board& b, const std::vector<Square>& box) {
  if (params.q < 2) return 0;
  const Stairs st = stairs(params.q);
  if (st.pattern.width() > b.n() || st.pattern.height() > b.n()) return 0;
  int best = 0;
  for (const auto& c : centralize(st.pattern, b)) {
    const bool inside = std::all_of(c.begin(), c.end(), [&](Square s) {
      return std::find(box.begin(), box.end(), s) != box.end();
    });
    if (inside) best = std::max(best, cover_count(c, b));
  }
  return best;
}

}  // namespace

std::string to_string(SearchMode m) { return m == SearchMode::kExhaustive ? "exhaustive" : "windowed"; }

SearchMode parse_search_mode(const std::string& s) {
  if (s == "exhaustive") return SearchMode::kExhaustive;
  if (s == "windowed") return SearchMode::kWindowed;
  throw DomainError("unknown search mode '" + s + "'");
}

std::vector<FundamentalClass> fundamental_classes(const std::vector<Configuration>& configs, const Board& b) {
  std::map<Configuration, FundamentalClass> classes;
  for (const auto& c : configs) {
    std::vector<Configuration> orbit;
    orbit.reserve(kAllTransforms.size());
    for (const Transform t : kAllTransforms) orbit.push_back(c.transformed(t, b));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    const Configuration& rep = orbit.front();
    if (classes.count(rep) != 0) continue;
    FundamentalClass cls;
    cls.representative = rep;
    cls.orbit_size = static_cast<int>(orbit.size());
    cls.stabilizer_order = 8 / cls.orbit_size;
    classes.emplace(rep, std::move(cls));
  }
  std::vector<FundamentalClass> out;
  out.reserve(classes.size());
  for (auto& [rep, cls] : classes) out.push_back(std::move(cls));
  return out;
}

int central_box_side(const Board& b, int window) {
  if (window < 1) throw DomainError("window must be >= 1");
  if (window > b.n()) throw DomainError("window " + std::to_string(window) + " exceeds board " + std::to_string(b.n()));
  return (window % 2 == b.n() % 2) ? window : window + 1;
}

std::vector<Square> central_box(const Board& b, int window) {
  const Board box(central_box_side(b, window));
  return box.squares();
}

OptimalSet exhaustive_optimal(const SearchParams& params) {
  if (params.q < 1) throw DomainError("q must be >= 1");
  const Board b(params.n);
  if (params.q > b.area())
    throw DomainError("q=" + std::to_string(params.q) + " exceeds the " + std::to_string(b.area()) + " squares of B_" +
                      std::to_string(params.n));
  const double subsets = binomial(b.area(), params.q);
  if (subsets > static_cast<double>(params.budget)) {
    std::ostringstream msg;
    msg << "exhaustive search over " << std::setprecision(4) << subsets << " subsets exceeds budget "
        << params.budget;
    throw BudgetExceeded(msg.str(), subsets);
  }

  const CoverMasks masks(b);
  kernel::Problem problem;
  problem.masks = &masks;
  problem.candidates = search_order(masks, b.squares());
  problem.q = params.q;
  problem.nonattacking = params.require_nonattacking;
  problem.node_budget = params.budget;
  const kernel::Result result = kernel::branch_and_bound(problem, params.workers);
  return assemble(params, b, result, b.n());
}

OptimalSet windowed_optimal(const SearchParams& params) {
  if (params.q < 1) throw DomainError("q must be >= 1");
  const Board b(params.n);
  int side = central_box_side(b, params.effective_window());
  const CoverMasks masks(b);
  int widenings = 0;
  while (true) {
    const std::vector<Square> box = Board(side).squares();
    kernel::Problem problem;
    problem.masks = &masks;
    problem.candidates = search_order(masks, box);
    problem.q = params.q;
    problem.nonattacking = true;
    problem.attained_hint = stairs_hint(params, b, box);
    problem.node_budget = params.budget;
    const kernel::Result result = kernel::branch_and_bound(problem, params.workers);
    OptimalSet out = assemble(params, b, result, side);
    out.params.require_nonattacking = true;
    out.widenings = widenings;
    if (!params.auto_widen || side + 2 > b.n() || !touches_box_edge(out.configurations, b, side)) return out;
    side += 2;
    ++widenings;
  }
}

OptimalSet optimal_set(const SearchParams& params) {
  return params.mode == SearchMode::kExhaustive ? exhaustive_optimal(params) : windowed_optimal(params);
}

bool border_certificate(const Configuration& c, const Board& b) {
  if (!c.feasible_on(b)) throw DomainError("configuration " + to_string(c) + " is not feasible on B_" + std::to_string(b.n()));
  if (!is_nonattacking(c)) throw DomainError("border certificate needs a non-attacking configuration");
  const Board outer(b.n() + 2);
  const AttackField field = attack_field(c, outer);
  const auto border = border_squares(outer);
  return std::all_of(border.begin(), border.end(), [&](Square s) { return field.at(s) <= 1; });
}

// Loss-minimal enumeration ----------------------------------------------------

namespace {

// Attack counts on a grid large enough to hold every crossing of queens
// placed in the search box, so internal loss equals its unbounded value.
class LossGrid {
 public:
  explicit LossGrid(int reach) : reach_(reach), side_(2 * reach + 1), counts_(static_cast<std::size_t>(side_ * side_), 0) {}

  // Adds a queen and returns the internal-loss increment.
  std::int64_t add(Square q) { return walk(q, +1); }
  void remove(Square q) { walk(q, -1); }

 private:
  std::int64_t walk(Square q, int delta) {
    std::int64_t gained = 0;
    static constexpr int kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (const auto& d : kDirs) {
      int x = q.x + d[0];
      int y = q.y + d[1];
      while (x >= -reach_ && x <= reach_ && y >= -reach_ && y <= reach_) {
        int& cell = counts_[static_cast<std::size_t>((y + reach_) * side_ + (x + reach_))];
        if (delta > 0 && cell >= 1) ++gained;
        cell += delta;
        x += d[0];
        y += d[1];
      }
    }
    return gained;
  }

  int reach_;
  int side_;
  std::vector<int> counts_;
};

class LossSearch {
 public:
  LossSearch(int q, std::vector<Square> squares, std::vector<std::int64_t> cen, int reach, std::int64_t incumbent,
             std::uint64_t budget)
      : q_(q), squares_(std::move(squares)), cen_(std::move(cen)), grid_(reach), incumbent_(incumbent),
        budget_(budget) {
    prefix_.assign(cen_.size() + 1, 0);
    for (std::size_t i = 0; i < cen_.size(); ++i) prefix_[i + 1] = prefix_[i] + cen_[i];
  }

  void run() { descend(0, 0, 0); }

  std::int64_t best() const { return incumbent_; }
  std::vector<std::vector<Square>>& hits() { return hits_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void descend(std::size_t start, std::int64_t loss, int depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("loss-minimal search exceeded budget", static_cast<double>(nodes_));
    if (depth == q_) {
      if (loss < incumbent_) {
        incumbent_ = loss;
        hits_.clear();
      }
      if (loss == incumbent_) hits_.push_back(chosen_);
      return;
    }
    const std::size_t r = static_cast<std::size_t>(q_ - depth);
    for (std::size_t i = start; i + r <= squares_.size(); ++i) {
      // cen_ ascending: the cheapest completion uses the next r - 1 squares.
      const std::int64_t bound = loss + cen_[i] + (prefix_[i + r] - prefix_[i + 1]);
      if (bound > incumbent_) break;
      const Square s = squares_[i];
      if (std::any_of(chosen_.begin(), chosen_.end(), [&](Square c) { return attacks(c, s); })) continue;
      const std::int64_t gained = grid_.add(s);
      chosen_.push_back(s);
      if (loss + cen_[i] + gained + (prefix_[i + r] - prefix_[i + 1]) <= incumbent_)
        descend(i + 1, loss + cen_[i] + gained, depth + 1);
      chosen_.pop_back();
      grid_.remove(s);
    }
  }

  int q_;
  std::vector<Square> squares_;
  std::vector<std::int64_t> cen_;
  std::vector<std::int64_t> prefix_;
  LossGrid grid_;
  std::int64_t incumbent_;
  std::uint64_t budget_;
  std::vector<Square> chosen_;
  std::vector<std::vector<Square>> hits_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LossMinimalReport loss_minimal_patterns(int q, int radius, bool even_board, std::uint64_t budget) {
  if (q < 1) throw DomainError("q must be >= 1");
  if (radius < 0) throw DomainError("radius must be >= 0");
  const Board box(even_board ? 2 * radius + 2 : 2 * radius + 1);
  if (q > box.area()) throw DomainError("q exceeds the squares in the search box");

  std::vector<Square> squares = box.squares();
  std::stable_sort(squares.begin(), squares.end(), [&](Square a, Square b) {
    return cenloss_queen(a, box) < cenloss_queen(b, box);
  });
  std::vector<std::int64_t> cen;
  cen.reserve(squares.size());
  for (const Square s : squares) cen.push_back(cenloss_queen(s, box));

  // Crossings of queens within Chebyshev R of the origin stay within 3R.
  const int reach = 3 * (radius + 1) + 1;
  LossSearch search(q, squares, cen, reach, std::numeric_limits<std::int64_t>::max(), budget);
  search.run();

  LossMinimalReport out;
  out.q = q;
  out.radius = radius;
  out.even_board = even_board;
  out.nodes = search.nodes();
  if (search.hits().empty()) {
    out.min_loss = -1;
    return out;
  }
  out.min_loss = search.best();
  for (auto& h : search.hits()) out.configurations.emplace_back(std::move(h));
  std::sort(out.configurations.begin(), out.configurations.end());
  return out;
}

}  // namespace qcover
