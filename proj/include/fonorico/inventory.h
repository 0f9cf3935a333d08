// include/fonorico/inventory.h
//
// Phoneme inventory of the assumed dialect. The built-in default is
// the 31-phoneme Sao Paulo Brazilian Portuguese set: 21 contoids and
// 10 vocoids. Custom inventories load from a tab-separated file so the
// pipeline can be re-targeted at other dialects.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fonorico {

enum class MajorClass : std::uint8_t { kVocoid, kContoid };

enum class Place : std::uint8_t {
  kBilabial,
  kLabiodental,
  kDental,
  kAlveolar,
  kPostalveolar,
  kPalatal,
  kVelar,
};

enum class Manner : std::uint8_t {
  kPlosive,
  kAffricate,
  kNasal,
  kTap,
  kFricative,
  kLateral,
};

enum class Advancement : std::uint8_t {
  kFront,
  kNearFront,
  kCentral,
  kNearBack,
  kBack,
};

enum class Height : std::uint8_t {
  kClose,
  kNearClose,
  kCloseMid,
  kOpenMid,
  kNearOpen,
  kOpen,
};

struct ContoidFeatures {
  Place place;
  Manner manner;
  bool operator==(const ContoidFeatures&) const = default;
};

struct VocoidFeatures {
  Advancement advancement;
  Height height;
  bool operator==(const VocoidFeatures&) const = default;
};

// A vocoid carries (advancement, height), a contoid (place, manner);
// the variant index is the major class.
using Features = std::variant<VocoidFeatures, ContoidFeatures>;

// Small dense index into the inventory. Streams and triphones are held
// as id sequences; symbols appear only at the serialization boundary.
using PhonemeId = std::uint8_t;

struct Phoneme {
  std::string symbol;  // canonical (composed) UTF-8
  Features features;

  MajorClass major_class() const {
    return std::holds_alternative<VocoidFeatures>(features)
               ? MajorClass::kVocoid
               : MajorClass::kContoid;
  }
  bool operator==(const Phoneme&) const = default;
};

class PhonemeInventory {
 public:
  // Throws ConfigError on duplicate symbols (after composition).
  explicit PhonemeInventory(std::vector<Phoneme> phonemes);

  std::size_t size() const { return phonemes_.size(); }
  const Phoneme& phoneme(PhonemeId id) const { return phonemes_[id]; }
  const std::vector<Phoneme>& phonemes() const { return phonemes_; }

  std::optional<PhonemeId> find(std::string_view symbol) const;

  // Throws UnknownSymbolError; context, when given, names where the
  // symbol came from (e.g. a ruleset line).
  PhonemeId id_of(std::string_view symbol,
                  const std::string& context = "") const;

  const std::string& symbol_of(PhonemeId id) const {
    return phonemes_[id].symbol;
  }

  MajorClass classify(PhonemeId id) const { return class_by_id_[id]; }
  MajorClass classify(std::string_view symbol,
                      const std::string& context = "") const;

  bool is_vocoid(PhonemeId id) const {
    return class_by_id_[id] == MajorClass::kVocoid;
  }

  std::size_t vocoid_count() const { return vocoid_count_; }
  std::size_t contoid_count() const { return phonemes_.size() - vocoid_count_; }

  bool operator==(const PhonemeInventory& other) const {
    return phonemes_ == other.phonemes_;
  }

 private:
  std::vector<Phoneme> phonemes_;
  std::vector<MajorClass> class_by_id_;
  std::unordered_map<std::string, PhonemeId> index_;
  std::size_t vocoid_count_ = 0;
};

// The Sao Paulo dialect inventory. Deterministic: repeated calls
// return equal values.
const PhonemeInventory& default_inventory();

// Loads an override file (see data/inventory_saopaulo.tsv for the
// format). Throws ConfigError on malformed rows or duplicates.
PhonemeInventory load_inventory(std::istream& in);
PhonemeInventory load_inventory_file(const std::string& path);

std::string_view to_string(MajorClass c);
std::string_view to_string(Place p);
std::string_view to_string(Manner m);
std::string_view to_string(Advancement a);
std::string_view to_string(Height h);

}  // namespace fonorico
