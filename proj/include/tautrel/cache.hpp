#pragma once

// On-disk store of relation vector maps, one JSON file per pipeline.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "tautrel/omega_expansion.hpp"

namespace tautrel {

class CacheCorruption : public std::runtime_error {
 public:
  CacheCorruption(const std::filesystem::path& file, const std::string& what)
      : std::runtime_error("corrupt cache entry " + file.string() + ": " + what), file_(file) {}
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
};

struct CacheKey {
  int genus = 0;
  int n = 0;
  std::optional<WeightedPartition> multiplier;
  bool orbit_reduced = true;

  std::string file_name() const;
};

class ResultCache {
 public:
  /// Bumped whenever the stored layout or the computation changes.
  static constexpr int kFormatVersion = 1;

  explicit ResultCache(std::filesystem::path directory);
  /// TAUTREL_CACHE_DIR, if set and nonempty.
  static std::optional<std::filesystem::path> default_directory();

  const std::filesystem::path& directory() const { return directory_; }

  /// nullopt when absent or written by another format version. Throws
  /// CacheCorruption when the file exists but cannot be trusted.
  std::optional<RelationVectorMap> load(const CacheKey& key) const;
  /// Writes through a temporary file and renames it into place.
  void store(const CacheKey& key, const RelationVectorMap& map) const;
  /// Removes every cache entry; returns how many files were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path directory_;
};

}  // namespace tautrel
