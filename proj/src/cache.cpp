#include "qcover/cache.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include "qcover/errors.hpp"

namespace qcover {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path ResultCache::path_for(const std::string& fingerprint) const {
  if (fingerprint.empty() || fingerprint.find_first_of("/\\.") != std::string::npos)
    throw DomainError("bad cache key '" + fingerprint + "'");
  return dir_ / fingerprint;
}

std::optional<std::string> ResultCache::load(const std::string& fingerprint) const {
  std::ifstream in(path_for(fingerprint), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ResultCache::store(const std::string& fingerprint, const std::string& bytes) const {
  static std::atomic<unsigned> counter{0};
  const fs::path target = path_for(fingerprint);
  const fs::path tmp =
      dir_ / ("." + fingerprint + ".tmp." + std::to_string(std::random_device{}()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << bytes;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("cannot write cache file " + tmp.string());
    }
  }
  // rename(2) replaces the target atomically on POSIX file systems.
  fs::rename(tmp, target);
}

}  // namespace qcover
