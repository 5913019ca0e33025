#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace qcover {

// A directory holding one file per fingerprint, named by the fingerprint.
// Writes go to a unique temporary file that is then renamed into place, so
// readers never see partial content.
class ResultCache {
 public:
  // Creates the directory if needed.
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& fingerprint) const;

  std::optional<std::string> load(const std::string& fingerprint) const;
  void store(const std::string& fingerprint, const std::string& bytes) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace qcover
