#include <algorithm>
#include <set>

#include "qcover/constructions.hpp"
#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/search.hpp"

namespace qcover {

namespace {

std::string class_fingerprint(const std::vector<FundamentalClass>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    if (!out.empty()) out += '|';
    out += to_string(cls.representative) + "x" + std::to_string(cls.orbit_size);
  }
  return out;
}

std::string pattern_fingerprint(const std::vector<Configuration>& configs) {
  std::set<std::string> patterns;
  for (const auto& c : configs) patterns.insert(to_string(Pattern(c).offsets()));
  std::string out;
  for (const auto& p : patterns) {
    if (!out.empty()) out += '|';
    out += p;
  }
  return out;
}

ThresholdReport scan(int q, int n_lo, int n_hi, const SearchParams& base) {
  if (n_lo < 1 || n_hi < n_lo) throw DomainError("invalid scan range");
  ThresholdReport report;
  report.q = q;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.mode = base.mode;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchParams params = base;
    params.q = q;
    params.n = n;
    if (params.mode == SearchMode::kWindowed) params.window = std::min(params.effective_window(), n);
    const OptimalSet set = optimal_set(params);
    ScanPoint point;
    point.n = n;
    point.max_cover = set.max_cover;
    point.optimal_count = static_cast<int>(set.configurations.size());
    point.all_nonattacking = std::all_of(set.configurations.begin(), set.configurations.end(),
                                         [](const Configuration& c) { return is_nonattacking(c); });
    point.classes = set.classes;
    point.class_fingerprint = class_fingerprint(set.classes);
    point.pattern_fingerprint = pattern_fingerprint(set.configurations);
    report.points.push_back(std::move(point));
  }
  report.label = "empirical within [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "] (" +
                 to_string(base.mode) + " search)";
  if (base.mode == SearchMode::kWindowed)
    report.label += "; windowed search cannot rule out attacking optima";
  return report;
}

}  // namespace

ThresholdReport nonattacking_threshold(int q, int n_lo, int n_hi, const SearchParams& base) {
  ThresholdReport report = scan(q, n_lo, n_hi, base);
  for (auto it = report.points.rbegin(); it != report.points.rend() && it->all_nonattacking; ++it)
    report.n1_candidate = it->n;
  return report;
}

ThresholdReport stabilizing_threshold(int q, int n_lo, int n_hi, const SearchParams& base) {
  ThresholdReport report = nonattacking_threshold(q, n_lo, n_hi, base);
  // Translation-free pattern sets are compared within each board parity,
  // since optimal placements shift with the parity of n.
  const std::string* last[2] = {nullptr, nullptr};
  for (auto it = report.points.rbegin(); it != report.points.rend(); ++it)
    if (last[it->n % 2] == nullptr) last[it->n % 2] = &it->pattern_fingerprint;
  bool broken[2] = {false, false};
  bool combined_broken = false;
  for (auto it = report.points.rbegin(); it != report.points.rend(); ++it) {
    const int parity = it->n % 2;
    const bool same = it->pattern_fingerprint == *last[parity];
    if (!same) broken[parity] = true;
    if (!broken[parity]) (parity == 0 ? report.n2_even : report.n2_odd) = it->n;
    if (!same) combined_broken = true;
    if (!combined_broken) report.n2_candidate = it->n;
  }
  return report;
}

}  // namespace qcover
