#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

#include "isoprod/characters.hpp"

namespace isoprod {

/// Version tag written into cache files; files with another tag are ignored and rewritten.
inline constexpr const char* kTableCacheVersion = "isoprod-chartab-1";

/// Environment variable that supplies a cache directory when none is set explicitly.
inline constexpr const char* kTableCacheEnv = "ISOPROD_CACHE_DIR";

/// Directory for on-disk character tables. nullopt disables the disk layer; an explicit
/// setting takes precedence over the environment variable.
void set_table_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> table_cache_directory();

struct TableCacheStats {
  std::size_t memory_hits = 0;
  std::size_t disk_hits = 0;
  std::size_t computed = 0;
};
TableCacheStats table_cache_stats();
/// Drops the in-memory layer and resets the counters.
void clear_table_cache();

/// Path of the cache file for `g` inside `dir` (one file per fingerprint).
std::filesystem::path table_cache_file(const std::filesystem::path& dir, const GroupTable& g);

}  // namespace isoprod
