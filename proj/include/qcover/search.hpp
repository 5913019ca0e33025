#pragma once

// Cover-optimal configuration search and symmetry classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcover/configuration.hpp"
#include "qcover/geometry.hpp"

namespace qcover {

enum class SearchMode { kExhaustive, kWindowed };

std::string to_string(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000'000ULL;

struct SearchParams {
  int q = 1;
  int n = 1;
  SearchMode mode = SearchMode::kExhaustive;
  // Side of the central search box in windowed mode; 0 means q + 3.
  int window = 0;
  // Forced on in windowed mode.
  bool require_nonattacking = false;
  int workers = 1;
  // Exhaustive: refuse when C(n^2, q) exceeds it. Both modes: node limit.
  std::uint64_t budget = kDefaultBudget;
  // Windowed: widen the box while an optimum touches its boundary.
  bool auto_widen = true;

  int effective_window() const { return window > 0 ? window : q + 3; }

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

struct FundamentalClass {
  // Lexicographically least member of the D4 orbit.
  Configuration representative;
  int orbit_size = 0;
  int stabilizer_order = 0;

  friend bool operator==(const FundamentalClass&, const FundamentalClass&) = default;
};

struct OptimalSet {
  SearchParams params;
  int max_cover = -1;
  // Every maximizer, sorted.
  std::vector<Configuration> configurations;
  // Sorted by representative.
  std::vector<FundamentalClass> classes;
  // Side of the D4-symmetric box actually searched (n in exhaustive mode).
  int searched_box = 0;
  // How many times the windowed search widened its box.
  int widenings = 0;

  friend bool operator==(const OptimalSet&, const OptimalSet&) = default;
};

// D4 orbits of the given configurations, representatives sorted.
std::vector<FundamentalClass> fundamental_classes(const std::vector<Configuration>& configs, const Board& b);

// Exact max cover over all q-subsets of B_n (non-attacking only when
// params.require_nonattacking). Throws BudgetExceeded (upfront, with the
// subset count as estimate) or DomainError for q > n^2.
OptimalSet exhaustive_optimal(const SearchParams& params);

// Max cover over non-attacking q-subsets of a central box, cover measured on
// all of B_n. Exact relative to the box. A box whose side parity differs from
// n's is rounded up by one so that it stays symmetric under D4. Throws
// DomainError when the window exceeds n.
OptimalSet windowed_optimal(const SearchParams& params);

// Dispatches on params.mode.
OptimalSet optimal_set(const SearchParams& params);

// The central D4-symmetric box of side >= window on board b.
std::vector<Square> central_box(const Board& b, int window);
int central_box_side(const Board& b, int window);

// True iff no square of the border of B_{n+2} is attacked by two or more
// queens. Throws DomainError unless c is non-attacking and feasible on b.
bool border_certificate(const Configuration& c, const Board& b);

struct LossMinimalReport {
  int q = 0;
  int radius = 0;
  bool even_board = false;
  std::int64_t min_loss = 0;
  // Placed relative to the board center, sorted.
  std::vector<Configuration> configurations;
  std::uint64_t nodes = 0;
};

// All non-attacking q-configurations within Chebyshev `radius` of the center
// of a board of the given parity that minimize the board-independent total
// loss. Losses come from line crossings, not from cover counts.
LossMinimalReport loss_minimal_patterns(int q, int radius, bool even_board,
                                        std::uint64_t budget = kDefaultBudget);

// Thresholds -----------------------------------------------------------------

struct ScanPoint {
  int n = 0;
  int max_cover = 0;
  int optimal_count = 0;
  bool all_nonattacking = false;
  // Sorted class representatives, exact placements.
  std::string class_fingerprint;
  // Sorted translation-free patterns of every optimum.
  std::string pattern_fingerprint;
  std::vector<FundamentalClass> classes;
};

struct ThresholdReport {
  int q = 0;
  int n_lo = 0;
  int n_hi = 0;
  SearchMode mode = SearchMode::kExhaustive;
  std::vector<ScanPoint> points;
  // Least n such that every scanned n' >= n has only non-attacking optima.
  std::optional<int> n1_candidate;
  // Per board parity: least scanned n from which the pattern set is constant
  // through n_hi.
  std::optional<int> n2_odd;
  std::optional<int> n2_even;
  // Least n such that every scanned n' >= n shows its parity's final set.
  std::optional<int> n2_candidate;
  // Candidates hold only relative to [n_lo, n_hi].
  std::string label;
};

ThresholdReport nonattacking_threshold(int q, int n_lo, int n_hi, const SearchParams& base = {});
ThresholdReport stabilizing_threshold(int q, int n_lo, int n_hi, const SearchParams& base = {});

}  // namespace qcover
