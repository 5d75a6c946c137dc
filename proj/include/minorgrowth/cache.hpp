#pragma once

#include "minorgrowth/enumerate.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace minorgrowth {

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Brute-force counts persisted across runs, keyed by ClassSpec::key().
///
/// The file is JSON: {"format", "version", "entries": {key: {n: count}},
/// "checksum"}, the checksum taken over the serialized entries. A file that
/// does not parse or does not match its checksum is discarded and rebuilt.
class CountCache {
 public:
  static constexpr int kVersion = 1;

  static CountCache load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::optional<BigInt> get(const std::string& key, int n) const;
  void put(const std::string& key, int n, const BigInt& count);

  bool rebuilt() const { return rebuilt_; }
  std::size_t size() const;

 private:
  std::map<std::string, std::map<int, BigInt>> entries_;
  bool rebuilt_ = false;
};

/// count_table that reads brute counts from the cache and stores new ones.
CountTable cached_count_table(const ClassSpec& spec, int lo, int hi, const CountOptions& options,
                              CountCache* cache);

}  // namespace minorgrowth
