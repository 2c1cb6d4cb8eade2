#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ginv/char_table.hpp"
#include "ginv/group.hpp"

namespace ginv {

/// 16 hex digits identifying a group up to its generator-multiplication
/// table (elements in canonical BFS order). Two groups with the same hash
/// have identical conjugacy classes and character tables.
std::string group_table_hash(const Group& g);

nlohmann::json character_table_to_json(const CharacterTable& table);
/// Throws std::runtime_error on malformed records.
CharacterTable character_table_from_json(const nlohmann::json& j);

/// On-disk memo of character tables, one JSON file per group hash.
///
/// Records hold exact integers only. A record is used only if its hash,
/// order and class count agree with the requested group and its degrees
/// satisfy sum d^2 = |G|; anything else is treated as a miss.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const Group& g) const;

  std::optional<CharacterTable> load(const Group& g, const ClassData& classes) const;
  /// Best effort: I/O failures are swallowed, since the cache is a pure memo.
  void store(const Group& g, const ClassData& classes, const CharacterTable& table) const;

  /// Loads, or computes and stores.
  CharacterTable table(const Group& g, const ClassData& classes, const CharTableOptions& options = {}) const;

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

/// Cache directory: the explicit argument if non-empty, else $GINV_CACHE,
/// else $HOME/.cache/ginv (or ./.ginv-cache without HOME).
std::filesystem::path default_cache_dir(const std::string& explicit_dir = {});

}  // namespace ginv
