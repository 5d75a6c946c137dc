#pragma once

#include "minorgrowth/class_spec.hpp"
#include "minorgrowth/numeric.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace minorgrowth {

class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kCountCap = 10;
inline constexpr int kApexCap = 8;

/// Membership in Ex(spec), memoized by canonical code. Not thread safe; use one
/// per worker.
class MembershipTest {
 public:
  explicit MembershipTest(const ClassSpec& spec);

  bool operator()(const Graph& g);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const ClassSpec* spec_;
  std::unordered_map<std::string, bool> cache_;
};

struct CountOptions {
  int workers = 1;
  /// Edge decisions fixed before work is handed out; -1 picks a default.
  int split_depth = -1;
};

/// Labelled graphs on {1..n} with no excluded minor (n <= kCountCap).
///
/// Depth-first over the n choose 2 edges in lexicographic order. A child adds
/// an edge after the last one present, and is visited only if it is still a
/// member: members are subgraph-closed, so a rejected child has no member
/// below it.
BigInt count_members(const ClassSpec& spec, int n, const CountOptions& options = {});

/// Visits every member on n vertices, in the order of the search above.
void enumerate_members(const ClassSpec& spec, int n,
                       const std::function<void(const Graph&)>& visit);

/// Labelled n-vertex graphs having a vertex whose deletion lands in the class
/// (n <= kApexCap). The empty graph counts iff it is a member.
BigInt apex_count(const ClassSpec& spec, int n);

BigInt bell(int n);
/// n (n-2) (n-4) ... ; 0!! = (-1)!! = 1.
BigInt double_factorial(int n);
/// I(n) = I(n-1) + (n-1) I(n-2).
BigInt matchings_count(int n);
BigInt path_forest_count(int n);
BigInt star_forest_count(int n);
/// Graphs made of one star plus isolated vertices.
BigInt star_class_count(int n);
BigInt forest_count(int n);

/// Closed-form counter for specs that denote one of the families above, keyed
/// on the set of excluded graphs up to isomorphism.
std::optional<std::function<BigInt(int)>> known_formula(const ClassSpec& spec);

enum class Provenance { kBrute, kFormula };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

class CountMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// g_n per n, each with the routes that produced it.
class CountTable {
 public:
  struct Entry {
    std::optional<BigInt> brute;
    std::optional<BigInt> formula;

    const BigInt& value() const { return brute ? *brute : *formula; }
    Provenance provenance() const { return brute ? Provenance::kBrute : Provenance::kFormula; }
    bool operator==(const Entry&) const = default;
  };

  CountTable() = default;
  explicit CountTable(std::string spec_key) : key_(std::move(spec_key)) {}

  const std::string& key() const { return key_; }

  /// Throws CountMismatch if the other route already recorded a different value.
  void record(int n, const BigInt& count, Provenance p);

  bool has(int n) const { return entries_.count(n) != 0; }
  const BigInt& at(int n) const { return entries_.at(n).value(); }
  const Entry& entry(int n) const { return entries_.at(n); }
  const std::map<int, Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool operator==(const CountTable&) const = default;

 private:
  std::string key_;
  std::map<int, Entry> entries_;
};

/// Brute counts for every n in [lo, hi], plus formula counts where the class is a
/// known family.
CountTable count_table(const ClassSpec& spec, int lo, int hi, const CountOptions& options = {});

}  // namespace minorgrowth
