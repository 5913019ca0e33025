#include "qcover/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcover/cache.hpp"
#include "qcover/constructions.hpp"
#include "qcover/coverage.hpp"
#include "qcover/errors.hpp"
#include "qcover/loss.hpp"
#include "qcover/record.hpp"
#include "qcover/render.hpp"
#include "qcover/search.hpp"

namespace qcover {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "text";
  int workers = 0;
  std::string cache_dir;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;

  bool structured() const { return format == "structured"; }
  int worker_count() const {
    return workers > 0 ? workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  }
};

json squares_json(const Configuration& c) {
  json out = json::array();
  for (const Square s : c) out.push_back({s.x, s.y});
  return out;
}

json breakdown_json(const LossBreakdown& l) {
  return {{"cenloss", l.cenloss}, {"even", l.even},   {"eta", l.eta},       {"gamma", l.gamma},
          {"inloss", l.inloss},   {"odd", l.odd},     {"stable", l.stable}, {"total", l.total}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_classes(std::ostream& out, const std::vector<FundamentalClass>& classes) {
  out << "  class  orbit  stabilizer  representative\n";
  int i = 1;
  for (const auto& cls : classes)
    out << "  " << std::left << std::setw(7) << i++ << std::setw(7) << cls.orbit_size << std::setw(12)
        << cls.stabilizer_order << to_string(cls.representative) << '\n';
  out << std::right;
}

// Subcommands ----------------------------------------------------------------

struct CoverArgs {
  std::string config;
  int n = 0;
};

int cmd_cover(const Globals& g, const CoverArgs& a, std::ostream& out) {
  const Configuration c = parse_configuration(a.config);
  const Board b(a.n);
  if (!c.feasible_on(b)) throw DomainError("configuration " + to_string(c) + " is not on B_" + std::to_string(a.n));
  const AttackField field = attack_field(c, b);
  std::map<int, int> histogram;
  for (const Square s : b.squares())
    if (!field.occupied(s)) ++histogram[field.at(s)];
  if (g.structured()) {
    json hist = json::array();
    for (const auto& [k, count] : histogram) hist.push_back({k, count});
    out << json{{"attack_histogram", hist}, {"config", squares_json(c)}, {"cover", field.covered()},
                {"n", a.n}, {"nonattacking", is_nonattacking(c)}, {"squares", b.area()}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "board: B_" << a.n << " (" << b.area() << " squares)\n";
  out << "queens: " << c.size() << ' ' << to_string(c) << (is_nonattacking(c) ? " non-attacking" : " attacking")
      << '\n';
  out << "cover: " << field.covered() << '\n';
  out << "empty squares by attacking number:";
  for (const auto& [k, count] : histogram) out << ' ' << k << ':' << count;
  out << '\n';
  return kExitOk;
}

struct LossArgs {
  std::string config;
  int n = 0;
};

int cmd_loss(const Globals& g, const LossArgs& a, std::ostream& out) {
  const Configuration c = parse_configuration(a.config);
  std::vector<std::pair<std::string, std::pair<int, LossBreakdown>>> rows;
  if (a.n > 0) {
    const Board b(a.n);
    rows.push_back({a.n % 2 == 0 ? "even" : "odd", {a.n, total_loss(c, b)}});
  } else {
    const auto both = loss_by_parity(c);
    rows.push_back({"odd", {stable_board_size(c, false), both[0]}});
    rows.push_back({"even", {stable_board_size(c, true), both[1]}});
  }
  if (g.structured()) {
    json j = {{"config", squares_json(c)}};
    for (const auto& [parity, nb] : rows) {
      json row = breakdown_json(nb.second);
      row["n"] = nb.first;
      if (nb.second.stable) row["predicted_cover"] = predicted_cover(c, Board(nb.first));
      j[parity] = row;
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "config: " << to_string(c) << '\n';
  for (const auto& [parity, nb] : rows) {
    const LossBreakdown& l = nb.second;
    out << parity << " board B_" << nb.first << ": inloss " << l.inloss << ", cenloss " << l.cenloss << ", total "
        << l.total << ", gamma " << l.gamma << ", eta " << l.eta << ", e/o " << l.even << '/' << l.odd
        << (l.stable ? ", stable" : ", not stable");
    if (l.stable) out << ", predicted cover " << predicted_cover(c, Board(nb.first));
    out << '\n';
  }
  return kExitOk;
}

struct SearchArgs {
  int q = 0;
  int n = 0;
  std::string mode = "exhaustive";
  int window = 0;
  bool nonattacking = false;
  bool no_widen = false;
};

SearchParams search_params(const Globals& g, const SearchArgs& a) {
  SearchParams p;
  p.q = a.q;
  p.n = a.n;
  p.mode = parse_search_mode(a.mode);
  p.window = a.window;
  p.require_nonattacking = a.nonattacking;
  p.auto_widen = !a.no_widen;
  p.workers = g.worker_count();
  p.budget = g.budget;
  return p;
}

void print_set(std::ostream& out, const ResultRecord& r, bool cached) {
  const OptimalSet& s = r.optimal_set;
  out << "q=" << r.params.q << " n=" << r.params.n << " mode=" << to_string(r.params.mode)
      << " max_cover=" << s.max_cover << '\n';
  out << "optimal configurations: " << s.configurations.size() << " in " << s.classes.size() << " classes";
  if (r.params.mode == SearchMode::kWindowed)
    out << " (box " << s.searched_box << ", widenings " << s.widenings << ")";
  out << '\n';
  print_classes(out, s.classes);
  out << "fingerprint " << r.fingerprint << (cached ? " (cached)" : "") << ", " << r.timing_ms << " ms\n";
}

int cmd_search(const Globals& g, const SearchArgs& a, std::ostream& out) {
  const SearchParams p = search_params(g, a);
  const std::string fp = engine_fingerprint(p);
  std::optional<ResultCache> cache;
  if (!g.cache_dir.empty()) cache.emplace(g.cache_dir);

  std::string line;
  bool cached = false;
  if (cache) {
    if (auto hit = cache->load(fp)) {
      line = std::move(*hit);
      cached = true;
    }
  }
  if (!cached) {
    const auto t0 = std::chrono::steady_clock::now();
    OptimalSet set = optimal_set(p);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    line = serialize(make_record(p, std::move(set), std::round(ms * 1000.0) / 1000.0));
    if (cache) cache->store(fp, line);
  }
  if (g.structured()) {
    out << line;
    return kExitOk;
  }
  print_set(out, deserialize(line), cached);
  return kExitOk;
}

struct ThresholdArgs {
  int q = 0;
  int lo = 0;
  int hi = 0;
  std::string mode = "exhaustive";
  int window = 0;
};

int cmd_thresholds(const Globals& g, const ThresholdArgs& a, std::ostream& out) {
  SearchParams base;
  base.mode = parse_search_mode(a.mode);
  base.window = a.window;
  base.workers = g.worker_count();
  base.budget = g.budget;
  const ThresholdReport r = stabilizing_threshold(a.q, a.lo, a.hi, base);
  const auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  if (g.structured()) {
    json points = json::array();
    for (const auto& pt : r.points)
      points.push_back({{"all_nonattacking", pt.all_nonattacking},
                        {"class_fingerprint", pt.class_fingerprint},
                        {"classes", pt.classes.size()},
                        {"max_cover", pt.max_cover},
                        {"n", pt.n},
                        {"optimal_count", pt.optimal_count}});
    out << json{{"label", r.label},          {"mode", to_string(r.mode)}, {"n1_candidate", opt(r.n1_candidate)},
                {"n2_candidate", opt(r.n2_candidate)}, {"n2_even", opt(r.n2_even)}, {"n2_odd", opt(r.n2_odd)},
                {"n_hi", r.n_hi},            {"n_lo", r.n_lo},            {"points", points},
                {"q", r.q}}
               .dump()
        << '\n';
    return kExitOk;
  }
  const auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  out << "q=" << r.q << ", n in [" << r.n_lo << ", " << r.n_hi << "], " << to_string(r.mode) << " search\n";
  out << "   n  max_cover  optima  classes  non-attacking\n";
  for (const auto& pt : r.points)
    out << std::setw(4) << pt.n << std::setw(11) << pt.max_cover << std::setw(8) << pt.optimal_count << std::setw(9)
        << pt.classes.size() << "  " << (pt.all_nonattacking ? "yes" : "no") << '\n';
  out << "N1 candidate: " << show(r.n1_candidate) << '\n';
  out << "N2 candidate: " << show(r.n2_candidate) << " (odd boards " << show(r.n2_odd) << ", even boards "
      << show(r.n2_even) << ")\n";
  out << r.label << '\n';
  return kExitOk;
}

int cmd_stairs(const Globals& g, int q, std::ostream& out) {
  const Stairs st = stairs(q);
  const StairsCandidate& c = st.chosen;
  if (g.structured()) {
    json cands = json::array();
    for (const auto& k : st.candidates)
      cands.push_back({{"cenloss_even", k.cenloss_even},
                       {"cenloss_odd", k.cenloss_odd},
                       {"inloss", k.inloss},
                       {"shift", {k.shift.x, k.shift.y}}});
    out << json{{"candidates", cands},
                {"cenloss_even", c.cenloss_even},
                {"cenloss_odd", c.cenloss_odd},
                {"height", st.pattern.height()},
                {"inloss", c.inloss},
                {"pattern", squares_json(st.pattern.offsets())},
                {"q", q},
                {"shift", {c.shift.x, c.shift.y}},
                {"total_even", c.total_even()},
                {"total_odd", c.total_odd()},
                {"width", st.pattern.width()}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "stairs q=" << q << ": " << to_string(st.pattern.offsets()) << '\n';
  out << "bounding box " << st.pattern.width() << " x " << st.pattern.height() << ", second sequence shifted by "
      << to_string(c.shift) << '\n';
  out << "internal loss " << c.inloss << '\n';
  out << "odd boards:  centralized loss " << c.cenloss_odd << ", total " << c.total_odd() << '\n';
  out << "even boards: centralized loss " << c.cenloss_even << ", total " << c.total_even() << '\n';
  return kExitOk;
}

int cmd_fundamentals(const Globals& g, const std::string& file, std::ostream& out) {
  const auto records = deserialize_all(read_file(file));
  for (const auto& r : records) {
    const OptimalSet& s = r.optimal_set;
    if (g.structured()) {
      json classes = json::array();
      for (const auto& cls : s.classes)
        classes.push_back({{"orbit_size", cls.orbit_size},
                           {"representative", squares_json(cls.representative)},
                           {"stabilizer_order", cls.stabilizer_order}});
      out << json{{"classes", classes}, {"configurations", s.configurations.size()}, {"max_cover", s.max_cover},
                  {"n", r.params.n}, {"q", r.params.q}}
                 .dump()
          << '\n';
      continue;
    }
    out << "q=" << r.params.q << " n=" << r.params.n << " max_cover=" << s.max_cover << ": "
        << s.configurations.size() << " configurations, " << s.classes.size() << " classes\n";
    print_classes(out, s.classes);
  }
  return kExitOk;
}

struct RenderArgs {
  std::string config;
  int n = 0;
  std::string annotate = "none";
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const Annotate mode = a.annotate == "attack-numbers" ? Annotate::kAttackNumbers : Annotate::kNone;
  out << render_board(parse_configuration(a.config), Board(a.n), mode);
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& file, bool rerun, std::ostream& out) {
  const auto records = deserialize_all(read_file(file));
  int mismatches = 0;
  for (const auto& r : records) {
    const OptimalSet& s = r.optimal_set;
    const Board b(r.params.n);
    std::vector<std::string> problems;
    for (const auto& c : s.configurations) {
      const int cover = cover_count(c, b);
      if (cover != s.max_cover)
        problems.push_back(to_string(c) + " covers " + std::to_string(cover) + ", record says " +
                           std::to_string(s.max_cover));
    }
    if (fundamental_classes(s.configurations, b) != s.classes) problems.push_back("class table differs");
    if (r.fingerprint != engine_fingerprint(r.params)) problems.push_back("fingerprint from another engine version");
    if (rerun) {
      SearchParams p = r.params;
      p.workers = g.worker_count();
      p.budget = g.budget;
      const OptimalSet fresh = optimal_set(p);
      if (fresh.max_cover != s.max_cover)
        problems.push_back("rerun max_cover " + std::to_string(fresh.max_cover));
      if (fresh.configurations != s.configurations) problems.push_back("rerun optimal set differs");
    }
    mismatches += problems.empty() ? 0 : 1;
    if (g.structured()) {
      out << json{{"fingerprint", r.fingerprint}, {"n", r.params.n}, {"ok", problems.empty()},
                  {"problems", problems}, {"q", r.params.q}}
                 .dump()
          << '\n';
    } else {
      out << (problems.empty() ? "OK       " : "MISMATCH ") << "q=" << r.params.q << " n=" << r.params.n
          << " fingerprint " << r.fingerprint << '\n';
      for (const auto& p : problems) out << "  " << p << '\n';
    }
  }
  return mismatches == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Queen cover optimization on centered boards", "qcover"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--workers", g.workers, "Search threads (0: one per core)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", g.cache_dir, "Directory of cached search results");
  app.add_option("--seed", g.seed, "Reserved; exact search is deterministic");
  app.add_option("--budget", g.budget, "Node limit for searches");

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Cover and attacking numbers of a configuration");
  cover_cmd->add_option("--config", cover.config, "Queens as (x,y);(x,y);...")->required();
  cover_cmd->add_option("--n", cover.n, "Board side")->required()->check(CLI::PositiveNumber);

  LossArgs loss;
  auto* loss_cmd = app.add_subcommand("loss", "Loss breakdown per board parity");
  loss_cmd->add_option("--config", loss.config, "Queens as (x,y);(x,y);...")->required();
  loss_cmd->add_option("--n", loss.n, "Evaluate on B_n instead of the smallest stable boards")
      ->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Every cover-optimal configuration");
  search_cmd->add_option("--q", search.q, "Number of queens")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--n", search.n, "Board side")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode)->check(CLI::IsMember({"exhaustive", "windowed"}));
  search_cmd->add_option("--window", search.window, "Central box side for windowed mode (default q+3)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--nonattacking", search.nonattacking, "Exhaustive mode: non-attacking configurations only");
  search_cmd->add_flag("--no-widen", search.no_widen, "Windowed mode: keep the box fixed");

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("thresholds", "Scan n for the non-attacking and stabilizing thresholds");
  thr_cmd->add_option("--q", thr.q)->required()->check(CLI::PositiveNumber);
  thr_cmd->add_option("--from", thr.lo, "Smallest board side")->required()->check(CLI::PositiveNumber);
  thr_cmd->add_option("--to", thr.hi, "Largest board side")->required()->check(CLI::PositiveNumber);
  thr_cmd->add_option("--mode", thr.mode)->check(CLI::IsMember({"exhaustive", "windowed"}));
  thr_cmd->add_option("--window", thr.window)->check(CLI::NonNegativeNumber);

  int stairs_q = 0;
  auto* stairs_cmd = app.add_subcommand("stairs", "Stairs construction and its losses");
  stairs_cmd->add_option("--q", stairs_q)->required()->check(CLI::Range(2, 10000));

  std::string fund_file;
  auto* fund_cmd = app.add_subcommand("fundamentals", "Class table of a result file");
  fund_cmd->add_option("file", fund_file)->required();

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Draw a configuration");
  render_cmd->add_option("--config", render.config)->required();
  render_cmd->add_option("--n", render.n)->required()->check(CLI::PositiveNumber);
  render_cmd->add_option("--annotate", render.annotate)->check(CLI::IsMember({"none", "attack-numbers"}));

  std::string verify_file;
  bool verify_rerun = false;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute a result file and report differences");
  verify_cmd->add_option("file", verify_file)->required();
  verify_cmd->add_flag("--rerun", verify_rerun, "Also repeat each search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qcover: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cover_cmd) return cmd_cover(g, cover, out);
    if (*loss_cmd) return cmd_loss(g, loss, out);
    if (*search_cmd) return cmd_search(g, search, out);
    if (*thr_cmd) return cmd_thresholds(g, thr, out);
    if (*stairs_cmd) return cmd_stairs(g, stairs_q, out);
    if (*fund_cmd) return cmd_fundamentals(g, fund_file, out);
    if (*render_cmd) return cmd_render(render, out);
    if (*verify_cmd) return cmd_verify(g, verify_file, verify_rerun, out);
  } catch (const BudgetExceeded& e) {
    err << "qcover: budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantBreach& e) {
    err << "qcover: invariant breach: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ParseError& e) {
    err << "qcover: parse error at byte " << e.offset() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "qcover: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qcover: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  err << "qcover: no subcommand\n";
  return kExitUsage;
}

}  // namespace qcover
