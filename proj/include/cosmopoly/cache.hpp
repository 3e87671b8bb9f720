#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace cosmopoly {

/// Directory of result records, one file per key. Records are written to
/// a temporary file and renamed into place.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// Flag value if non-empty, else $COSMOPOLY_CACHE if set and non-empty,
  /// else no cache.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag_value);

  /// The JSON record stored under exactly this key. Unreadable or
  /// mismatched files count as misses.
  std::optional<std::string> lookup(const std::string& key) const;
  /// `record` must be a JSON document.
  void store(const std::string& key, const std::string& record) const;

  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace cosmopoly
