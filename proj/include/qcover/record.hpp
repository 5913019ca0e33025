#pragma once

// Line-delimited JSON result records.
//
// A record is one line: a JSON object with lexicographically sorted keys,
// configurations written as sorted [x, y] arrays. The fingerprint hashes the
// engine version together with the parameters that determine the result, so
// worker count and node budget do not enter it.

#include <cstdint>
#include <string>
#include <vector>

#include "qcover/search.hpp"

namespace qcover {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "qcover-engine/1";

struct ResultRecord {
  int schema_version = kSchemaVersion;
  // Parameters as requested.
  SearchParams params;
  OptimalSet optimal_set;
  double timing_ms = 0.0;
  std::string fingerprint;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// 16 lowercase hex digits.
std::string engine_fingerprint(const SearchParams& params);

ResultRecord make_record(const SearchParams& params, OptimalSet set, double timing_ms);

// One line, terminated by '\n'.
std::string serialize(const ResultRecord& r);

// Parses one record. Throws ParseError (byte offset into `line`),
// ValidationError (dotted field path) or UnsupportedVersion.
ResultRecord deserialize(const std::string& line);

// Parses every non-blank line. ParseError offsets are relative to `text`.
std::vector<ResultRecord> deserialize_all(const std::string& text);

}  // namespace qcover
