#include "isoprod/table_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "isoprod/errors.hpp"

namespace isoprod {

namespace {

using Key = std::pair<std::string, std::uint64_t>;

struct Cache {
  std::shared_mutex mutex;
  std::map<Key, TablePtr> tables;
  std::atomic<std::size_t> memory_hits{0}, disk_hits{0}, computed{0};
  bool dir_set = false;
  std::optional<std::filesystem::path> dir;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::optional<CharacterTable> load(const std::filesystem::path& file, const GroupPtr& group) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("version").get<std::string>() != kTableCacheVersion) return std::nullopt;
    if (j.at("table_hash").get<std::string>() != hex(group->table_hash())) return std::nullopt;
    std::vector<Character> chars;
    for (const auto& c : j.at("characters")) {
      Character ch;
      ch.degree = c.at("degree").get<std::uint32_t>();
      ch.values = c.at("values").get<std::vector<std::vector<std::uint32_t>>>();
      chars.push_back(std::move(ch));
    }
    CharacterTable table(group, std::move(chars));
    std::uint64_t sum = 0;
    for (const auto& chi : table.characters()) sum += std::uint64_t{chi.degree} * chi.degree;
    if (sum != group->order()) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store(const std::filesystem::path& dir, const CharacterTable& table) {
  const GroupTable& g = table.group();
  nlohmann::json j;
  j["version"] = kTableCacheVersion;
  j["fingerprint"] = fingerprint(g);
  j["table_hash"] = hex(g.table_hash());
  j["exponent"] = g.exponent();
  auto& chars = j["characters"] = nlohmann::json::array();
  for (const auto& chi : table.characters()) chars.push_back({{"degree", chi.degree}, {"values", chi.values}});
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto target = table_cache_file(dir, g);
  auto tmp = target;
  tmp += ".tmp" + hex(reinterpret_cast<std::uintptr_t>(&table));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

void set_table_cache_directory(std::optional<std::filesystem::path> dir) {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.dir_set = true;
  c.dir = std::move(dir);
}

std::optional<std::filesystem::path> table_cache_directory() {
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (c.dir_set) return c.dir;
  }
  if (const char* env = std::getenv(kTableCacheEnv); env != nullptr && *env != '\0')
    return std::filesystem::path(env);
  return std::nullopt;
}

TableCacheStats table_cache_stats() {
  auto& c = cache();
  return {c.memory_hits.load(), c.disk_hits.load(), c.computed.load()};
}

void clear_table_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.tables.clear();
  c.memory_hits = 0;
  c.disk_hits = 0;
  c.computed = 0;
}

std::filesystem::path table_cache_file(const std::filesystem::path& dir, const GroupTable& g) {
  return dir / ("chartab-" + hex(fnv1a(fingerprint(g))) + ".json");
}

TablePtr cached_character_table(const GroupPtr& group) {
  auto& c = cache();
  const Key key{group->spec(), group->table_hash()};
  {
    std::shared_lock lock(c.mutex);
    auto it = c.tables.find(key);
    if (it != c.tables.end()) {
      ++c.memory_hits;
      return it->second;
    }
  }
  auto dir = table_cache_directory();
  std::unique_lock lock(c.mutex);
  auto it = c.tables.find(key);
  if (it != c.tables.end()) {
    ++c.memory_hits;
    return it->second;
  }
  TablePtr table;
  if (dir) {
    if (auto loaded = load(table_cache_file(*dir, *group), group)) {
      table = std::make_shared<const CharacterTable>(std::move(*loaded));
      ++c.disk_hits;
    }
  }
  if (!table) {
    table = std::make_shared<const CharacterTable>(character_table(group));
    ++c.computed;
    if (dir) store(*dir, *table);
  }
  c.tables.emplace(key, table);
  return table;
}

}  // namespace isoprod
