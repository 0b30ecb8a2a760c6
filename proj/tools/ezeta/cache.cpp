#include "cache.hpp"

#include <ctime>
#include <fstream>
#include <utility>

#include <json.hpp>

namespace ezeta {

using nlohmann::json;

ConstantsCache::ConstantsCache(std::string path) : path_(std::move(path)) { load(); }

void ConstantsCache::load() {
  std::ifstream in(path_);
  if (!in) return;  // cold start
  json doc;
  try {
    in >> doc;
    if (!doc.is_array()) return;
    for (const auto& item : doc) {
      CacheEntry entry;
      entry.name = item.at("name").get<std::string>();
      entry.value = item.at("value").get<std::string>();
      entry.precision_bits = item.at("precision_bits").get<unsigned>();
      entry.generator = item.value("generator", std::string{});
      entry.timestamp = item.value("timestamp", std::string{});
      entry.error_bound = item.value("error_bound", std::string{});
      entry.terms_used = item.value("terms_used", 0u);
      entries_[entry.name] = std::move(entry);
    }
  } catch (const json::exception&) {
    entries_.clear();  // malformed file: regenerate from scratch
  }
}

void ConstantsCache::save() const {
  json doc = json::array();
  for (const auto& [name, entry] : entries_) {
    doc.push_back(json{{"name", entry.name},
                       {"value", entry.value},
                       {"precision_bits", entry.precision_bits},
                       {"generator", entry.generator},
                       {"timestamp", entry.timestamp},
                       {"error_bound", entry.error_bound},
                       {"terms_used", entry.terms_used}});
  }
  std::ofstream out(path_);
  out << doc.dump(2) << "\n";
}

std::optional<CacheEntry> ConstantsCache::lookup(const std::string& name,
                                                 unsigned min_bits) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  if (it->second.precision_bits < min_bits) return std::nullopt;
  return it->second;
}

void ConstantsCache::store(CacheEntry entry) {
  if (entry.timestamp.empty()) {
    char buffer[32];
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    entry.timestamp = buffer;
  }
  entries_[entry.name] = std::move(entry);
  save();
}

}  // namespace ezeta
