#include "qcover/search_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>

#include "qcover/errors.hpp"

namespace qcover::kernel {

namespace {

constexpr int kNoBound = std::numeric_limits<int>::min() / 2;
constexpr std::uint64_t kBudgetStride = 1 << 14;

bool test_bit(const std::uint64_t* bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1U; }

int marginal(const std::uint64_t* cov, std::span<const std::uint64_t> mask) {
  int pc = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) pc += std::popcount(mask[w] & ~cov[w]);
  return pc;
}

// State shared by all shards of one search.
struct Shared {
  const Problem& problem;
  std::atomic<int> incumbent;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  Shared(const Problem& p, int seed) : problem(p), incumbent(seed) {}

  void raise_incumbent(int value) {
    int cur = incumbent.load(std::memory_order_relaxed);
    while (value > cur && !incumbent.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }
};

struct Hit {
  int cover;
  std::vector<int> squares;
};

// Per-thread depth-first search state.
class Searcher {
 public:
  explicit Searcher(Shared& shared)
      : shared_(shared),
        masks_(*shared.problem.masks),
        words_(masks_.words()),
        q_(shared.problem.q),
        cov_(static_cast<std::size_t>(q_ + 1) * static_cast<std::size_t>(words_), 0),
        cand_(static_cast<std::size_t>(q_ + 1)),
        marg_(static_cast<std::size_t>(q_ + 1)),
        suffix_(static_cast<std::size_t>(q_ + 1)),
        chosen_(static_cast<std::size_t>(q_), -1) {}

  // Expands the subtree rooted at "first queen = candidates[root]".
  void run_shard(const std::vector<int>& root_cand, const std::vector<int>& root_marg, std::size_t root) {
    const int sq = root_cand[root];
    chosen_[0] = sq;
    std::uint64_t* cov1 = cov(1);
    const auto m = masks_.mask(sq);
    for (int w = 0; w < words_; ++w) cov1[w] = m[static_cast<std::size_t>(w)];
    auto& next = cand_[1];
    next.clear();
    for (std::size_t j = root + 1; j < root_cand.size(); ++j) {
      if (shared_.problem.nonattacking && test_bit(cov1, root_cand[j])) continue;
      next.push_back(root_cand[j]);
    }
    expand(1, root_marg[root]);
  }

  std::vector<Hit>& hits() { return hits_; }
  std::uint64_t local_nodes() const { return nodes_; }

  void flush_nodes() {
    shared_.nodes.fetch_add(nodes_ - flushed_, std::memory_order_relaxed);
    flushed_ = nodes_;
  }

 private:
  std::uint64_t* cov(int depth) { return cov_.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(words_); }

  void count_node() {
    if (++nodes_ - flushed_ >= kBudgetStride) {
      flush_nodes();
      if (shared_.nodes.load(std::memory_order_relaxed) > shared_.problem.node_budget)
        shared_.aborted.store(true, std::memory_order_relaxed);
    }
  }

  // depth queens placed (chosen_[0..depth)), cover value `covered`.
  void expand(int depth, int covered) {
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    count_node();
    const int remaining = q_ - depth;
    const auto& cand = cand_[static_cast<std::size_t>(depth)];
    if (static_cast<int>(cand.size()) < remaining) return;
    const std::uint64_t* cur = cov(depth);
    auto& marg = marg_[static_cast<std::size_t>(depth)];
    marg.resize(cand.size());
    for (std::size_t j = 0; j < cand.size(); ++j) marg[j] = marginal(cur, masks_.mask(cand[j]));

    if (remaining == 1) {
      for (std::size_t j = 0; j < cand.size(); ++j) {
        const int total = covered + marg[j];
        if (total < shared_.incumbent.load(std::memory_order_relaxed)) continue;
        shared_.raise_incumbent(total);
        chosen_[static_cast<std::size_t>(depth)] = cand[j];
        hits_.push_back({total, chosen_});
      }
      return;
    }

    auto& suffix = suffix_[static_cast<std::size_t>(depth)];
    fill_suffix_bounds(marg, remaining - 1, suffix);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (suffix[i] == kNoBound) break;  // fewer than remaining-1 later candidates
      const int bound = covered + marg[i] + suffix[i];
      if (bound < shared_.incumbent.load(std::memory_order_relaxed)) continue;
      const int sq = cand[i];
      chosen_[static_cast<std::size_t>(depth)] = sq;
      std::uint64_t* child = cov(depth + 1);
      const auto m = masks_.mask(sq);
      for (int w = 0; w < words_; ++w) child[w] = cur[w] | m[static_cast<std::size_t>(w)];
      auto& next = cand_[static_cast<std::size_t>(depth + 1)];
      next.clear();
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (shared_.problem.nonattacking && test_bit(child, cand[j])) continue;
        next.push_back(cand[j]);
      }
      expand(depth + 1, covered + marg[i]);
      if (shared_.aborted.load(std::memory_order_relaxed)) return;
    }
  }

  // suffix[i] = sum of the k largest marg[j], j > i; kNoBound if fewer exist.
  static void fill_suffix_bounds(const std::vector<int>& marg, int k, std::vector<int>& suffix) {
    suffix.assign(marg.size(), kNoBound);
    int top[64];
    int filled = 0;
    int sum = 0;
    for (std::size_t idx = marg.size(); idx-- > 0;) {
      suffix[idx] = filled == k ? sum : kNoBound;
      const int v = marg[idx];
      if (filled < k) {
        int p = filled++;
        while (p > 0 && top[p - 1] < v) {
          top[p] = top[p - 1];
          --p;
        }
        top[p] = v;
        sum += v;
      } else if (v > top[k - 1]) {
        sum += v - top[k - 1];
        int p = k - 1;
        while (p > 0 && top[p - 1] < v) {
          top[p] = top[p - 1];
          --p;
        }
        top[p] = v;
      }
    }
  }

  Shared& shared_;
  const CoverMasks& masks_;
  int words_;
  int q_;
  std::vector<std::uint64_t> cov_;
  std::vector<std::vector<int>> cand_;
  std::vector<std::vector<int>> marg_;
  std::vector<std::vector<int>> suffix_;
  std::vector<int> chosen_;
  std::vector<Hit> hits_;
  std::uint64_t nodes_ = 0;
  std::uint64_t flushed_ = 0;
};

void validate(const Problem& p) {
  if (p.masks == nullptr) throw DomainError("search problem without cover masks");
  if (p.q < 1) throw DomainError("q must be >= 1");
  if (p.q > 64) throw DomainError("q must be <= 64");
  for (const int c : p.candidates)
    if (c < 0 || c >= p.masks->board().area()) throw DomainError("candidate index off board");
}

Result finish(std::vector<Hit>& hits, int max_cover, std::uint64_t nodes) {
  Result out;
  out.max_cover = max_cover;
  out.nodes = nodes;
  for (Hit& h : hits) {
    if (h.cover != max_cover) continue;
    std::sort(h.squares.begin(), h.squares.end());
    out.maximizers.push_back(std::move(h.squares));
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  out.maximizers.erase(std::unique(out.maximizers.begin(), out.maximizers.end()), out.maximizers.end());
  return out;
}

}  // namespace

int greedy_cover(const Problem& problem) {
  validate(problem);
  const CoverMasks& masks = *problem.masks;
  std::vector<std::uint64_t> cov(static_cast<std::size_t>(masks.words()), 0);
  std::vector<bool> used(problem.candidates.size(), false);
  int covered = 0;
  for (int placed = 0; placed < problem.q; ++placed) {
    int best = -1;
    int best_gain = -1;
    for (std::size_t j = 0; j < problem.candidates.size(); ++j) {
      if (used[j]) continue;
      const int sq = problem.candidates[j];
      if (problem.nonattacking && test_bit(cov.data(), sq)) continue;
      const int gain = marginal(cov.data(), masks.mask(sq));
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) return 0;
    used[static_cast<std::size_t>(best)] = true;
    const auto m = masks.mask(problem.candidates[static_cast<std::size_t>(best)]);
    for (std::size_t w = 0; w < cov.size(); ++w) cov[w] |= m[w];
    covered += best_gain;
  }
  return covered;
}

Result branch_and_bound(const Problem& problem, int workers) {
  validate(problem);
  const int greedy = greedy_cover(problem);
  const int seed = std::max(problem.attained_hint, greedy);
  Shared shared(problem, seed);

  const CoverMasks& masks = *problem.masks;
  const std::vector<int>& root_cand = problem.candidates;
  std::vector<int> root_marg(root_cand.size());
  for (std::size_t j = 0; j < root_cand.size(); ++j) root_marg[j] = masks.solo_cover(root_cand[j]);

  std::vector<std::vector<Hit>> shard_hits(root_cand.size());

  if (problem.q == 1) {
    std::vector<Hit> hits;
    int best = -1;
    for (std::size_t j = 0; j < root_cand.size(); ++j) {
      best = std::max(best, root_marg[j]);
      hits.push_back({root_marg[j], {root_cand[j]}});
    }
    return finish(hits, best, root_cand.size());
  }

  // Root-level bound: first queen at i, the rest among later candidates.
  std::vector<int> root_suffix(root_cand.size(), kNoBound);
  {
    std::vector<int> sorted_tail;
    const int k = problem.q - 1;
    for (std::size_t idx = root_cand.size(); idx-- > 0;) {
      if (static_cast<int>(sorted_tail.size()) >= k) {
        int sum = 0;
        for (int t = 0; t < k; ++t) sum += sorted_tail[static_cast<std::size_t>(t)];
        root_suffix[idx] = sum;
      }
      sorted_tail.insert(std::upper_bound(sorted_tail.begin(), sorted_tail.end(), root_marg[idx], std::greater<>()),
                         root_marg[idx]);
      if (static_cast<int>(sorted_tail.size()) > k) sorted_tail.pop_back();
    }
  }

  const int threads = std::max(1, workers);
  const auto shards = static_cast<std::int64_t>(root_cand.size());
#pragma omp parallel num_threads(threads)
  {
    Searcher searcher(shared);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < shards; ++i) {
      const auto root = static_cast<std::size_t>(i);
      if (shared.aborted.load(std::memory_order_relaxed)) continue;
      if (root_suffix[root] == kNoBound) continue;
      if (root_marg[root] + root_suffix[root] < shared.incumbent.load(std::memory_order_relaxed)) continue;
      searcher.hits().clear();
      searcher.run_shard(root_cand, root_marg, root);
      shard_hits[root] = std::move(searcher.hits());
      searcher.hits() = {};
    }
    searcher.flush_nodes();
  }

  if (shared.aborted.load())
    throw BudgetExceeded("search aborted after " + std::to_string(shared.nodes.load()) + " nodes (budget " +
                             std::to_string(problem.node_budget) + ")",
                         static_cast<double>(shared.nodes.load()));

  std::vector<Hit> all;
  for (auto& shard : shard_hits)
    for (Hit& h : shard) all.push_back(std::move(h));
  const int best = shared.incumbent.load();
  // The seed may exceed every hit only if it was not actually attained.
  // A positive greedy cover means some feasible subset exists.
  const bool attained = std::any_of(all.begin(), all.end(), [&](const Hit& h) { return h.cover == best; });
  if (!attained && (!all.empty() || greedy > 0 || problem.attained_hint > 0)) throw InvariantBreach("search seed " + std::to_string(best) + " was never attained");
  if (!attained) return Result{-1, {}, shared.nodes.load()};
  return finish(all, best, shared.nodes.load());
}

Result brute_force(const Problem& problem) {
  validate(problem);
  const CoverMasks& masks = *problem.masks;
  const auto size = static_cast<int>(problem.candidates.size());
  const int q = problem.q;
  std::vector<Hit> hits;
  int best = -1;
  std::uint64_t nodes = 0;
  if (q > size) return Result{};

  std::vector<int> pick(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint64_t> cov(static_cast<std::size_t>(masks.words()));
  while (true) {
    ++nodes;
    if (nodes > problem.node_budget) throw BudgetExceeded("brute force exceeded budget", static_cast<double>(nodes));
    std::fill(cov.begin(), cov.end(), 0);
    bool ok = true;
    for (const int p : pick) {
      const int sq = problem.candidates[static_cast<std::size_t>(p)];
      if (problem.nonattacking && test_bit(cov.data(), sq)) {
        ok = false;
        break;
      }
      const auto m = masks.mask(sq);
      for (std::size_t w = 0; w < cov.size(); ++w) cov[w] |= m[w];
    }
    if (ok) {
      int total = 0;
      for (const auto w : cov) total += std::popcount(w);
      if (total >= best) {
        if (total > best) hits.clear();
        best = total;
        std::vector<int> squares;
        for (const int p : pick) squares.push_back(problem.candidates[static_cast<std::size_t>(p)]);
        hits.push_back({total, std::move(squares)});
      }
    }
    // next combination in lexicographic order
    int i = q - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == size - q + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < q; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return finish(hits, best, nodes);
}

}  // namespace qcover::kernel
