#pragma once

#include <map>
#include <optional>
#include <string>

namespace ezeta {

/// One persisted reference constant.
struct CacheEntry {
  std::string name;
  std::string value;  // decimal string
  unsigned precision_bits = 0;
  std::string generator;  // command line that produced the value
  std::string timestamp;  // ISO 8601 UTC
  std::string error_bound;
  unsigned terms_used = 0;
};

/// JSON-backed store of computed constants. A malformed or missing file is
/// treated as an empty cache; values are regenerated, never a crash.
class ConstantsCache {
 public:
  explicit ConstantsCache(std::string path);

  /// Entry under `name` whose stored precision covers `min_bits`, if any.
  std::optional<CacheEntry> lookup(const std::string& name, unsigned min_bits) const;

  /// Insert or replace, then persist immediately.
  void store(CacheEntry entry);

  size_t size() const { return entries_.size(); }

 private:
  void load();
  void save() const;

  std::string path_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace ezeta
