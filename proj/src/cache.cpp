#include "tautrel/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "tautrel/serialize.hpp"

namespace tautrel {

namespace {

constexpr std::string_view kPrefix = "relations-";
constexpr std::string_view kSuffix = ".json";

Json key_json(const CacheKey& key) {
  Json out;
  out["genus"] = key.genus;
  out["n"] = key.n;
  out["multiplier"] = key.multiplier ? to_json(*key.multiplier) : Json(nullptr);
  out["orbit_reduced"] = key.orbit_reduced;
  return out;
}

}  // namespace

std::string CacheKey::file_name() const {
  std::string name = std::string(kPrefix) + "g" + std::to_string(genus) + "-n" + std::to_string(n);
  if (multiplier) name += "-m" + fnv1a_hex(to_json(*multiplier).dump());
  name += orbit_reduced ? "-orbits" : "-full";
  return name + std::string(kSuffix);
}

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<std::filesystem::path> ResultCache::default_directory() {
  const char* value = std::getenv("TAUTREL_CACHE_DIR");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

std::optional<RelationVectorMap> ResultCache::load(const CacheKey& key) const {
  const auto file = directory_ / key.file_name();
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();

  Json envelope;
  try {
    envelope = Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    throw CacheCorruption(file, std::string("unparsable JSON (") + e.what() + ")");
  }
  try {
    if (envelope.at("format_version").get<int>() != kFormatVersion) return std::nullopt;
    if (envelope.at("key") != key_json(key)) throw CacheCorruption(file, "key does not match file name");
    const Json& relations = envelope.at("relations");
    if (envelope.at("checksum").get<std::string>() != fnv1a_hex(relations.at("vectors").dump())) {
      throw CacheCorruption(file, "checksum mismatch");
    }
    RelationVectorMap map = relation_map_from_json(relations);
    map.orbit_reduced = key.orbit_reduced;
    if (map.genus != key.genus || map.n != key.n || map.multiplier != key.multiplier) {
      throw CacheCorruption(file, "stored relations belong to another pipeline");
    }
    return map;
  } catch (const CacheCorruption&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheCorruption(file, e.what());
  }
}

void ResultCache::store(const CacheKey& key, const RelationVectorMap& map) const {
  std::filesystem::create_directories(directory_);
  Json envelope;
  envelope["format_version"] = kFormatVersion;
  envelope["key"] = key_json(key);
  Json relations = to_json(map);
  envelope["checksum"] = fnv1a_hex(relations.at("vectors").dump());
  envelope["relations"] = std::move(relations);

  const auto target = directory_ / key.file_name();
  auto temporary = target;
  temporary += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    out << envelope.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + temporary.string());
  }
  std::filesystem::rename(temporary, target);
}

std::size_t ResultCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!std::filesystem::is_directory(directory_, ec)) return 0;
  for (const auto& entry : std::filesystem::directory_iterator(directory_)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with(kPrefix) &&
        (name.ends_with(kSuffix) || name.find(".json.tmp") != std::string::npos)) {
      std::filesystem::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace tautrel
