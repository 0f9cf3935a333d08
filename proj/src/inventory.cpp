// src/inventory.cpp
#include "fonorico/inventory.h"

#include <fstream>
#include <sstream>

#include "fonorico/utf8.h"
#include "fonorico/util.h"

namespace fonorico {

namespace {

Phoneme contoid(const char* symbol, Place p, Manner m) {
  return Phoneme{symbol, ContoidFeatures{p, m}};
}

Phoneme vocoid(const char* symbol, Advancement a, Height h) {
  return Phoneme{symbol, VocoidFeatures{a, h}};
}

std::vector<Phoneme> sao_paulo_phonemes() {
  using enum Place;
  using enum Manner;
  using enum Advancement;
  using enum Height;
  return {
      // plosives
      contoid("p", kBilabial, kPlosive),
      contoid("b", kBilabial, kPlosive),
      contoid("t", kDental, kPlosive),
      contoid("d", kDental, kPlosive),
      contoid("k", kVelar, kPlosive),
      contoid("g", kVelar, kPlosive),
      // affricates
      contoid("tʃ", kDental, kAffricate),
      contoid("dʒ", kDental, kAffricate),
      // nasals
      contoid("m", kBilabial, kNasal),
      contoid("n", kDental, kNasal),
      contoid("ɲ", kPalatal, kNasal),
      // tap
      contoid("ɾ", kAlveolar, kTap),
      // fricatives
      contoid("f", kLabiodental, kFricative),
      contoid("v", kLabiodental, kFricative),
      contoid("s", kAlveolar, kFricative),
      contoid("z", kAlveolar, kFricative),
      contoid("ʃ", kPostalveolar, kFricative),
      contoid("ʒ", kPostalveolar, kFricative),
      contoid("ɣ", kVelar, kFricative),
      // laterals
      contoid("l", kAlveolar, kLateral),
      contoid("ʎ", kPalatal, kLateral),
      // vowels
      vocoid("i", kFront, kClose),
      vocoid("u", kBack, kClose),
      vocoid("ɪ", kNearFront, kNearClose),
      vocoid("ʊ", kNearBack, kNearClose),
      vocoid("e", kFront, kCloseMid),
      vocoid("o", kBack, kCloseMid),
      vocoid("ɛ", kFront, kOpenMid),
      vocoid("ɔ", kBack, kOpenMid),
      vocoid("ɐ", kCentral, kNearOpen),
      vocoid("a", kFront, kOpen),
  };
}

template <typename Enum, std::size_t N>
Enum enum_from_name(std::string_view name,
                    const std::array<std::string_view, N>& names,
                    const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  throw ConfigError(std::string("unknown ") + what + " '" +
                    std::string(name) + "'");
}

constexpr std::array<std::string_view, 7> kPlaceNames = {
    "bilabial", "labiodental", "dental",  "alveolar",
    "postalveolar", "palatal", "velar"};
constexpr std::array<std::string_view, 6> kMannerNames = {
    "plosive", "affricate", "nasal", "tap", "fricative", "lateral"};
constexpr std::array<std::string_view, 5> kAdvancementNames = {
    "front", "nearfront", "central", "nearback", "back"};
constexpr std::array<std::string_view, 6> kHeightNames = {
    "close", "nearclose", "closemid", "openmid", "nearopen", "open"};

}  // namespace

PhonemeInventory::PhonemeInventory(std::vector<Phoneme> phonemes)
    : phonemes_(std::move(phonemes)) {
  if (phonemes_.size() > 255) {
    throw ConfigError("inventory too large (max 255 phonemes)");
  }
  class_by_id_.reserve(phonemes_.size());
  for (std::size_t i = 0; i < phonemes_.size(); ++i) {
    Phoneme& p = phonemes_[i];
    p.symbol = utf8::compose(p.symbol);
    if (p.symbol.empty()) {
      throw ConfigError("empty phoneme symbol in inventory");
    }
    auto [it, inserted] =
        index_.emplace(p.symbol, static_cast<PhonemeId>(i));
    if (!inserted) {
      throw ConfigError("duplicate phoneme symbol '" + p.symbol +
                        "' in inventory");
    }
    class_by_id_.push_back(p.major_class());
    if (p.major_class() == MajorClass::kVocoid) ++vocoid_count_;
  }
}

std::optional<PhonemeId> PhonemeInventory::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) {
    // Retry with composition for callers handing us decomposed input.
    std::string canonical = utf8::compose(symbol);
    it = index_.find(canonical);
    if (it == index_.end()) return std::nullopt;
  }
  return it->second;
}

PhonemeId PhonemeInventory::id_of(std::string_view symbol,
                                  const std::string& context) const {
  if (auto id = find(symbol)) return *id;
  throw UnknownSymbolError(std::string(symbol), context);
}

MajorClass PhonemeInventory::classify(std::string_view symbol,
                                      const std::string& context) const {
  return class_by_id_[id_of(symbol, context)];
}

const PhonemeInventory& default_inventory() {
  static const PhonemeInventory inv{sao_paulo_phonemes()};
  return inv;
}

PhonemeInventory load_inventory(std::istream& in) {
  std::vector<Phoneme> phonemes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto cols = split(body, '\t');
    if (cols.size() != 4) {
      throw ConfigError("inventory line " + std::to_string(line_no) +
                        ": expected 4 tab-separated columns, got " +
                        std::to_string(cols.size()));
    }
    std::string symbol(trim(cols[0]));
    std::string klass(trim(cols[1]));
    std::string f1(trim(cols[2]));
    std::string f2(trim(cols[3]));
    if (klass == "C") {
      phonemes.push_back(Phoneme{
          symbol,
          ContoidFeatures{
              enum_from_name<Place>(f1, kPlaceNames, "place"),
              enum_from_name<Manner>(f2, kMannerNames, "manner")}});
    } else if (klass == "V") {
      phonemes.push_back(Phoneme{
          symbol,
          VocoidFeatures{enum_from_name<Advancement>(f1, kAdvancementNames,
                                                     "advancement"),
                         enum_from_name<Height>(f2, kHeightNames, "height")}});
    } else {
      throw ConfigError("inventory line " + std::to_string(line_no) +
                        ": class must be V or C, got '" + klass + "'");
    }
  }
  return PhonemeInventory(std::move(phonemes));
}

PhonemeInventory load_inventory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open inventory file: " + path);
  return load_inventory(in);
}

std::string_view to_string(MajorClass c) {
  return c == MajorClass::kVocoid ? "vocoid" : "contoid";
}
std::string_view to_string(Place p) {
  return kPlaceNames[static_cast<std::size_t>(p)];
}
std::string_view to_string(Manner m) {
  return kMannerNames[static_cast<std::size_t>(m)];
}
std::string_view to_string(Advancement a) {
  return kAdvancementNames[static_cast<std::size_t>(a)];
}
std::string_view to_string(Height h) {
  return kHeightNames[static_cast<std::size_t>(h)];
}

}  // namespace fonorico
