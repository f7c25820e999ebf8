#include "codegree/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "codegree/jsonio.hpp"

namespace codegree {

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

TableCache::TableCache(std::string dir, std::function<void(const std::string&)> warn)
    : dir_(std::move(dir)), warn_(std::move(warn)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string TableCache::resolve_dir(const std::string& flag_value) {
  const char* env = std::getenv("CODEGREE_LAB_CACHE");
  if (env && *env) return env;
  return flag_value;
}

std::string TableCache::entry_path(const std::string& spec) const {
  std::string key = spec + "|v" + std::to_string(kFormatVersion);
  return dir_ + "/" + hex64(fnv1a64(key)) + ".json";
}

std::optional<CharacterTable> TableCache::load(const std::string& spec) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(spec));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    nlohmann::json j = nlohmann::json::parse(buf.str());
    if (j.at("format_version").get<uint32_t>() != kFormatVersion) {
      if (warn_) warn_("stale cache entry ignored for " + spec);
      return std::nullopt;
    }
    if (j.at("spec").get<std::string>() != spec) return std::nullopt;
    std::string payload = j.at("table").dump(2);
    if (hex64(fnv1a64(payload)) != j.at("checksum").get<std::string>()) {
      if (warn_) warn_("cache checksum mismatch for " + spec + ", recomputing");
      return std::nullopt;
    }
    return table_from_json(payload);
  } catch (const std::exception& e) {
    if (warn_) warn_(std::string("unreadable cache entry (") + e.what() + "), recomputing");
    return std::nullopt;
  }
}

void TableCache::store(const CharacterTable& T) const {
  if (!enabled()) return;
  std::string payload = table_to_json(T);
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["spec"] = T.spec;
  j["checksum"] = hex64(fnv1a64(payload));
  j["table"] = nlohmann::json::parse(payload);
  std::lock_guard<std::mutex> lock(write_mutex_);
  std::string path = entry_path(T.spec);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace codegree
