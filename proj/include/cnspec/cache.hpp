#pragma once

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "cnspec/group.hpp"
#include "cnspec/group_spec.hpp"

namespace cnspec {

/// Directory of Cayley-table dumps keyed by group spec. Entries are written
/// once (temp file + rename) and never modified.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  /// --cache wins over CN_SPECTRA_CACHE; nullopt when neither is set.
  static std::optional<std::filesystem::path> resolve(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("CN_SPECTRA_CACHE"); env != nullptr && *env != '\0') return std::filesystem::path(env);
    return std::nullopt;
  }

  std::filesystem::path path_for(const GroupSpec& spec) const {
    std::string key;
    for (char c : to_json(spec).dump()) key += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return dir_ / (key + ".json");
  }

  std::optional<GroupTable> load(const GroupSpec& spec) const {
    std::ifstream in(path_for(spec));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return table_from_json(nlohmann::json::parse(ss.str()));
  }

  void store(const GroupSpec& spec, const GroupTable& g) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto target = path_for(spec);
    if (std::filesystem::exists(target)) return;
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << table_to_json(g).dump();
    }
    std::filesystem::rename(tmp, target);
  }

  GroupTable load_or_build(const GroupSpec& spec) {
    if (auto g = load(spec)) return std::move(*g);
    GroupTable g = build_family(spec);
    store(spec, g);
    return g;
  }

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
};

}  // namespace cnspec
