#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>

#include "codegree/chartab.hpp"

namespace codegree {

/// File-backed character-table cache keyed by canonical spec string and
/// format version. Entries carry a checksum; a corrupted or stale entry
/// is treated as a miss (with a warning) and recomputed.
class TableCache {
 public:
  static constexpr uint32_t kFormatVersion = 1;

  /// dir may be empty: a disabled cache that never hits.
  explicit TableCache(std::string dir, std::function<void(const std::string&)> warn = {});

  bool enabled() const { return !dir_.empty(); }
  std::optional<CharacterTable> load(const std::string& spec) const;
  void store(const CharacterTable& T) const;  // key is T.spec

  std::string entry_path(const std::string& spec) const;

  /// CODEGREE_LAB_CACHE overrides the --cache-dir flag.
  static std::string resolve_dir(const std::string& flag_value);

 private:
  std::string dir_;
  std::function<void(const std::string&)> warn_;
  mutable std::mutex write_mutex_;  // single writer
};

uint64_t fnv1a64(const std::string& data);

}  // namespace codegree
