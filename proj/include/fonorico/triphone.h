// include/fonorico/triphone.h
//
// Triphone extraction and the vocoid/contoid category bookkeeping.
// Triphones are sentence-internal sliding windows of three phonemes;
// each is classified into one of the eight V/C categories by the major
// class of its positions.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fonorico/inventory.h"

namespace fonorico {

struct Triphone {
  PhonemeId p1, p2, p3;

  std::uint32_t key() const {
    return (std::uint32_t(p1) << 16) | (std::uint32_t(p2) << 8) |
           std::uint32_t(p3);
  }
  static Triphone from_key(std::uint32_t k) {
    return Triphone{PhonemeId(k >> 16), PhonemeId((k >> 8) & 0xff),
                    PhonemeId(k & 0xff)};
  }
  bool operator==(const Triphone&) const = default;
};

enum class TriphoneCategory : std::uint8_t {
  kVVV = 0,
  kVVC,
  kVCV,
  kVCC,
  kCVV,
  kCVC,
  kCCV,
  kCCC,
};

inline constexpr std::size_t kCategoryCount = 8;

std::string_view category_name(TriphoneCategory c);

// "VVV" ... "CCC" -> category; throws ConfigError otherwise.
TriphoneCategory category_from_name(std::string_view name);

// Positional V/C mapping of the three major classes.
TriphoneCategory categorize(const Triphone& t, const PhonemeInventory& inv);

// Sliding window of width 3, stride 1: max(0, n-2) triphones.
std::vector<Triphone> extract(std::span<const PhonemeId> phonemes);

// Per-category counts of previously unseen triphones in one batch
// (duplicates within the batch count once).
struct NewContribution {
  std::array<std::uint32_t, kCategoryCount> by_category{};

  std::uint32_t total() const {
    std::uint32_t sum = 0;
    for (auto v : by_category) sum += v;
    return sum;
  }
};

struct CategoryCounts {
  std::uint64_t distinct = 0;
  std::uint64_t total = 0;
};

// Occurrence counts of every observed triphone plus per-category
// distinct/total tallies. Single-writer; parallel pipelines build
// per-shard inventories and combine them with merge().
class TriphoneInventory {
 public:
  explicit TriphoneInventory(const PhonemeInventory& inv);

  // Increments counts; the returned contribution is computed against
  // the pre-update state.
  NewContribution add(std::span<const Triphone> triphones);

  bool contains(const Triphone& t) const {
    return counts_.find(t.key()) != counts_.end();
  }

  std::uint64_t count(const Triphone& t) const;
  std::uint64_t distinct_count() const { return counts_.size(); }
  std::uint64_t total_count() const { return total_; }
  const CategoryCounts& category(TriphoneCategory c) const {
    return per_category_[static_cast<std::size_t>(c)];
  }
  const std::array<CategoryCounts, kCategoryCount>& per_category() const {
    return per_category_;
  }
  const std::unordered_map<std::uint32_t, std::uint64_t>& counts() const {
    return counts_;
  }

  TriphoneCategory categorize(const Triphone& t) const;

  // Pointwise count addition; commutative and associative. Both sides
  // must share the same phoneme inventory basis.
  static TriphoneInventory merge(const TriphoneInventory& a,
                                 const TriphoneInventory& b);

  // Line-delimited {p1 p2 p3 category count}, sorted lexicographically
  // by symbols for byte-stable output.
  void save(std::ostream& out) const;
  static TriphoneInventory load(std::istream& in, const PhonemeInventory& inv);

  const PhonemeInventory& phoneme_inventory() const { return *inv_; }

 private:
  const PhonemeInventory* inv_;
  std::vector<MajorClass> class_by_id_;
  std::unordered_map<std::uint32_t, std::uint64_t> counts_;
  std::array<CategoryCounts, kCategoryCount> per_category_{};
  std::uint64_t total_ = 0;
};

}  // namespace fonorico
