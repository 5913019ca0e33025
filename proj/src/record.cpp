#include "qcover/record.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qcover/errors.hpp"

namespace qcover {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json config_to_json(const Configuration& c) {
  json out = json::array();
  for (const Square s : c) out.push_back({s.x, s.y});
  return out;
}

json params_to_json(const SearchParams& p) {
  return {{"auto_widen", p.auto_widen},
          {"budget", p.budget},
          {"mode", to_string(p.mode)},
          {"n", p.n},
          {"q", p.q},
          {"require_nonattacking", p.require_nonattacking},
          {"window", p.window},
          {"workers", p.workers}};
}

json set_to_json(const OptimalSet& s) {
  json configs = json::array();
  for (const auto& c : s.configurations) configs.push_back(config_to_json(c));
  json classes = json::array();
  for (const auto& cls : s.classes)
    classes.push_back({{"orbit_size", cls.orbit_size},
                       {"representative", config_to_json(cls.representative)},
                       {"stabilizer_order", cls.stabilizer_order}});
  return {{"classes", std::move(classes)},
          {"configurations", std::move(configs)},
          {"max_cover", s.max_cover},
          {"params", params_to_json(s.params)},
          {"searched_box", s.searched_box},
          {"widenings", s.widenings}};
}

// Typed field access that reports the dotted path of whatever is wrong.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(path_.empty() ? "record" : path_, "expected an object");
  }

  void only(std::initializer_list<const char*> keys) const {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j_.items())
      if (allowed.count(k) == 0) throw ValidationError(field(k), "unknown field");
  }

  const json& get(const char* key) const {
    const auto it = j_.find(key);
    if (it == j_.end()) throw ValidationError(field(key), "missing");
    return *it;
  }

  std::int64_t integer(const char* key, std::int64_t lo, std::int64_t hi) const {
    const json& v = get(key);
    if (!v.is_number_integer()) throw ValidationError(field(key), "expected an integer");
    const std::int64_t x = v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)
                               ? INT64_MAX
                               : v.get<std::int64_t>();
    if (x < lo || x > hi) throw ValidationError(field(key), "out of range");
    return x;
  }

  std::uint64_t unsigned_integer(const char* key) const {
    const json& v = get(key);
    if (!v.is_number_unsigned()) throw ValidationError(field(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const char* key) const {
    const json& v = get(key);
    if (!v.is_boolean()) throw ValidationError(field(key), "expected a boolean");
    return v.get<bool>();
  }

  std::string string(const char* key) const {
    const json& v = get(key);
    if (!v.is_string()) throw ValidationError(field(key), "expected a string");
    return v.get<std::string>();
  }

  double number(const char* key) const {
    const json& v = get(key);
    if (!v.is_number()) throw ValidationError(field(key), "expected a number");
    return v.get<double>();
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& j_;
  std::string path_;
};

constexpr std::int64_t kIntMax = 1'000'000;

Configuration config_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array of [x, y] pairs");
  std::vector<Square> queens;
  queens.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ValidationError(at, "expected an [x, y] integer pair");
    const std::int64_t x = p[0].get<std::int64_t>();
    const std::int64_t y = p[1].get<std::int64_t>();
    if (x < -kIntMax || x > kIntMax || y < -kIntMax || y > kIntMax) throw ValidationError(at, "coordinate out of range");
    queens.push_back({static_cast<int>(x), static_cast<int>(y)});
  }
  if (!std::is_sorted(queens.begin(), queens.end())) throw ValidationError(path, "queens not sorted");
  if (std::adjacent_find(queens.begin(), queens.end()) != queens.end()) throw ValidationError(path, "duplicate queen");
  return Configuration(std::move(queens));
}

SearchParams params_from_json(const json& j, const std::string& path) {
  const Reader r(j, path);
  r.only({"auto_widen", "budget", "mode", "n", "q", "require_nonattacking", "window", "workers"});
  SearchParams p;
  p.auto_widen = r.boolean("auto_widen");
  p.budget = r.unsigned_integer("budget");
  try {
    p.mode = parse_search_mode(r.string("mode"));
  } catch (const DomainError& e) {
    throw ValidationError(r.field("mode"), e.what());
  }
  p.n = static_cast<int>(r.integer("n", 1, kIntMax));
  p.q = static_cast<int>(r.integer("q", 1, kIntMax));
  p.require_nonattacking = r.boolean("require_nonattacking");
  p.window = static_cast<int>(r.integer("window", 0, kIntMax));
  p.workers = static_cast<int>(r.integer("workers", 0, 4096));
  return p;
}

OptimalSet set_from_json(const json& j, const std::string& path) {
  const Reader r(j, path);
  r.only({"classes", "configurations", "max_cover", "params", "searched_box", "widenings"});
  OptimalSet s;
  s.params = params_from_json(r.get("params"), r.field("params"));
  const Board b(s.params.n);
  s.max_cover = static_cast<int>(r.integer("max_cover", -1, b.area()));
  s.searched_box = static_cast<int>(r.integer("searched_box", 0, s.params.n));
  s.widenings = static_cast<int>(r.integer("widenings", 0, kIntMax));

  const json& configs = r.get("configurations");
  if (!configs.is_array()) throw ValidationError(r.field("configurations"), "expected an array");
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const std::string at = r.field("configurations") + "[" + std::to_string(i) + "]";
    Configuration c = config_from_json(configs[i], at);
    if (c.size() != s.params.q) throw ValidationError(at, "expected " + std::to_string(s.params.q) + " queens");
    if (!c.feasible_on(b)) throw ValidationError(at, "queen off the board");
    s.configurations.push_back(std::move(c));
  }
  if (!std::is_sorted(s.configurations.begin(), s.configurations.end()) ||
      std::adjacent_find(s.configurations.begin(), s.configurations.end()) != s.configurations.end())
    throw ValidationError(r.field("configurations"), "not sorted and distinct");

  const json& classes = r.get("classes");
  if (!classes.is_array()) throw ValidationError(r.field("classes"), "expected an array");
  int orbit_total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string at = r.field("classes") + "[" + std::to_string(i) + "]";
    const Reader cr(classes[i], at);
    cr.only({"orbit_size", "representative", "stabilizer_order"});
    FundamentalClass cls;
    cls.orbit_size = static_cast<int>(cr.integer("orbit_size", 1, 8));
    cls.stabilizer_order = static_cast<int>(cr.integer("stabilizer_order", 1, 8));
    if (cls.orbit_size * cls.stabilizer_order != 8) throw ValidationError(at, "orbit_size * stabilizer_order != 8");
    cls.representative = config_from_json(cr.get("representative"), cr.field("representative"));
    if (!std::binary_search(s.configurations.begin(), s.configurations.end(), cls.representative))
      throw ValidationError(cr.field("representative"), "not among the configurations");
    orbit_total += cls.orbit_size;
    s.classes.push_back(std::move(cls));
  }
  if (orbit_total != static_cast<int>(s.configurations.size()))
    throw ValidationError(r.field("classes"), "orbit sizes do not sum to the configuration count");
  return s;
}

ResultRecord record_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("record", "expected an object");
  const auto v = j.find("schema_version");
  if (v == j.end()) throw ValidationError("schema_version", "missing");
  if (!v->is_number_integer()) throw ValidationError("schema_version", "expected an integer");
  if (v->get<std::int64_t>() != kSchemaVersion)
    throw UnsupportedVersion("unsupported schema_version " + v->dump() + " (this build reads " +
                             std::to_string(kSchemaVersion) + ")");

  const Reader r(j, "");
  r.only({"fingerprint", "optimal_set", "params", "schema_version", "timing_ms"});
  ResultRecord out;
  out.params = params_from_json(r.get("params"), "params");
  out.optimal_set = set_from_json(r.get("optimal_set"), "optimal_set");
  out.timing_ms = r.number("timing_ms");
  if (out.timing_ms < 0) throw ValidationError("timing_ms", "negative");
  out.fingerprint = r.string("fingerprint");
  if (out.fingerprint.size() != 16 ||
      !std::all_of(out.fingerprint.begin(), out.fingerprint.end(),
                   [](char ch) { return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'); }))
    throw ValidationError("fingerprint", "expected 16 lowercase hex digits");
  if (out.optimal_set.params.q != out.params.q || out.optimal_set.params.n != out.params.n)
    throw ValidationError("optimal_set.params", "q or n differs from params");
  return out;
}

}  // namespace

std::string engine_fingerprint(const SearchParams& p) {
  std::ostringstream canon;
  canon << kEngineVersion << ";schema=" << kSchemaVersion << ";q=" << p.q << ";n=" << p.n
        << ";mode=" << to_string(p.mode);
  if (p.mode == SearchMode::kWindowed)
    canon << ";window=" << p.effective_window() << ";auto_widen=" << p.auto_widen;
  else
    canon << ";nonattacking=" << p.require_nonattacking;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(canon.str())));
  return hex;
}

ResultRecord make_record(const SearchParams& params, OptimalSet set, double timing_ms) {
  ResultRecord r;
  r.params = params;
  r.optimal_set = std::move(set);
  r.timing_ms = timing_ms;
  r.fingerprint = engine_fingerprint(params);
  return r;
}

std::string serialize(const ResultRecord& r) {
  const json j = {{"fingerprint", r.fingerprint},
                  {"optimal_set", set_to_json(r.optimal_set)},
                  {"params", params_to_json(r.params)},
                  {"schema_version", r.schema_version},
                  {"timing_ms", r.timing_ms}};
  return j.dump() + "\n";
}

ResultRecord deserialize(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based position of the offending byte.
    throw ParseError(std::string("malformed record: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  return record_from_json(j);
}

std::vector<ResultRecord> deserialize_all(const std::string& text) {
  std::vector<ResultRecord> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        out.push_back(deserialize(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace qcover
