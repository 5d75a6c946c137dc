#include "minorgrowth/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace minorgrowth {

namespace {

constexpr const char* kFormat = "minorgrowth-count-cache";

nlohmann::json entries_json(const std::map<std::string, std::map<int, BigInt>>& entries) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, counts] : entries) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [n, c] : counts) row[std::to_string(n)] = to_decimal(c);
    out[key] = row;
  }
  return out;
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CountCache CountCache::load(const std::filesystem::path& path) {
  CountCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format") != kFormat || j.at("version") != kVersion) throw std::runtime_error("format");
    const nlohmann::json& entries = j.at("entries");
    if (j.at("checksum").get<std::string>() != fnv1a_hex(entries.dump())) {
      throw std::runtime_error("checksum");
    }
    for (const auto& [key, counts] : entries.items()) {
      for (const auto& [n, c] : counts.items()) {
        cache.entries_[key][std::stoi(n)] = parse_decimal(c.get<std::string>());
      }
    }
  } catch (const std::exception&) {
    cache.entries_.clear();
    cache.rebuilt_ = true;
  }
  return cache;
}

void CountCache::save(const std::filesystem::path& path) const {
  nlohmann::json entries = entries_json(entries_);
  nlohmann::json j = {{"format", kFormat},
                      {"version", kVersion},
                      {"entries", entries},
                      {"checksum", fnv1a_hex(entries.dump())}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<BigInt> CountCache::get(const std::string& key, int n) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  auto jt = it->second.find(n);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

void CountCache::put(const std::string& key, int n, const BigInt& count) {
  entries_[key][n] = count;
}

std::size_t CountCache::size() const {
  std::size_t total = 0;
  for (const auto& [key, counts] : entries_) total += counts.size();
  return total;
}

CountTable cached_count_table(const ClassSpec& spec, int lo, int hi, const CountOptions& options,
                              CountCache* cache) {
  CountTable table(spec.key());
  auto formula = known_formula(spec);
  for (int n = lo; n <= hi; ++n) {
    std::optional<BigInt> brute = cache ? cache->get(spec.key(), n) : std::nullopt;
    if (!brute) {
      brute = count_members(spec, n, options);
      if (cache) cache->put(spec.key(), n, *brute);
    }
    table.record(n, *brute, Provenance::kBrute);
    if (formula) table.record(n, (*formula)(n), Provenance::kFormula);
  }
  return table;
}

}  // namespace minorgrowth
