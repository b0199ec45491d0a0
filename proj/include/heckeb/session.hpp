#pragma once

// Owns the per-rank group contexts and per-(rank, order) tables for one
// process, with optional persistence of completed tables to a cache
// directory.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "heckeb/kl.hpp"
#include "heckeb/wgroup.hpp"

namespace heckeb {

class Session {
 public:
  explicit Session(std::string cache_dir = {}) : cache_dir_(std::move(cache_dir)) {}

  WGroup& group(int n) {
    auto it = groups_.find(n);
    if (it == groups_.end()) it = groups_.emplace(n, std::make_unique<WGroup>(n)).first;
    return *it->second;
  }

  KLTable& table(int n, const MonomialOrder& ord) {
    auto key = std::make_pair(n, ord.descriptor());
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
    auto tbl = std::make_unique<KLTable>(group(n), ord);
    if (!cache_dir_.empty()) {
      std::ifstream in(cache_path(n, ord));
      if (in) tbl->load_cache(in);
    }
    return *tables_.emplace(key, std::move(tbl)).first->second;
  }

  /// Writes every completed table to the cache directory.
  void persist() {
    if (cache_dir_.empty()) return;
    std::filesystem::create_directories(cache_dir_);
    for (auto& [key, tbl] : tables_) {
      if (!tbl->complete()) continue;
      std::ofstream out(cache_path(key.first, tbl->order()));
      if (out) tbl->save_cache(out);
    }
  }

 private:
  std::string cache_path(int n, const MonomialOrder& ord) const {
    std::string desc = ord.descriptor();
    for (char& c : desc)
      if (c == ':' || c == ',' || c == '/') c = '_';
    return cache_dir_ + "/kl-n" + std::to_string(n) + "-" + desc + ".txt";
  }

  std::map<int, std::unique_ptr<WGroup>> groups_;
  std::map<std::pair<int, std::string>, std::unique_ptr<KLTable>> tables_;
  std::string cache_dir_;
};

}  // namespace heckeb
