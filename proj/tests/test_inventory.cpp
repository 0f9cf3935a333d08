// tests/test_inventory.cpp
#include "fonorico/inventory.h"

#include <sstream>

#include "doctest.h"
#include "fonorico/util.h"

using namespace fonorico;

TEST_CASE("default inventory has 21 contoids and 10 vocoids") {
  const PhonemeInventory& inv = default_inventory();
  CHECK(inv.size() == 31);
  CHECK(inv.contoid_count() == 21);
  CHECK(inv.vocoid_count() == 10);
}

TEST_CASE("affricates carry dental place") {
  const PhonemeInventory& inv = default_inventory();
  const Phoneme& tch = inv.phoneme(inv.id_of("tʃ"));
  REQUIRE(tch.major_class() == MajorClass::kContoid);
  const auto& features = std::get<ContoidFeatures>(tch.features);
  CHECK(features.place == Place::kDental);
  CHECK(features.manner == Manner::kAffricate);
}

TEST_CASE("every symbol resolves back to itself") {
  const PhonemeInventory& inv = default_inventory();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    auto id = static_cast<PhonemeId>(i);
    CHECK(inv.id_of(inv.symbol_of(id)) == id);
  }
}

TEST_CASE("classification partitions the inventory") {
  const PhonemeInventory& inv = default_inventory();
  std::size_t vocoids = 0;
  std::size_t contoids = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    MajorClass c = inv.classify(static_cast<PhonemeId>(i));
    if (c == MajorClass::kVocoid) ++vocoids;
    if (c == MajorClass::kContoid) ++contoids;
    // Class always agrees with the feature bundle.
    CHECK(c == inv.phoneme(static_cast<PhonemeId>(i)).major_class());
  }
  CHECK(vocoids + contoids == inv.size());
}

TEST_CASE("classify known symbols") {
  const PhonemeInventory& inv = default_inventory();
  CHECK(inv.classify("ɛ") == MajorClass::kVocoid);
  CHECK(inv.classify("ɾ") == MajorClass::kContoid);
  CHECK(inv.classify("ɪ") == MajorClass::kVocoid);
  CHECK(inv.classify("ʊ") == MajorClass::kVocoid);
}

TEST_CASE("unknown symbols raise an error naming the symbol") {
  const PhonemeInventory& inv = default_inventory();
  try {
    inv.classify("x", "in test corpus");
    FAIL("expected UnknownSymbolError");
  } catch (const UnknownSymbolError& e) {
    CHECK(e.symbol() == "x");
    CHECK(std::string(e.what()).find("x") != std::string::npos);
    CHECK(std::string(e.what()).find("in test corpus") != std::string::npos);
  }
}

TEST_CASE("repeated default_inventory calls agree") {
  CHECK(default_inventory() == default_inventory());
}

TEST_CASE("inventory file round-trips the default set") {
  PhonemeInventory loaded = load_inventory_file(
      std::string(FONORICO_SOURCE_DIR) + "/data/inventory_saopaulo.tsv");
  CHECK(loaded == default_inventory());
}

TEST_CASE("duplicate symbols are rejected") {
  std::istringstream in(
      "a\tV\tfront\topen\n"
      "a\tV\tcentral\tnearopen\n");
  CHECK_THROWS_AS(load_inventory(in), ConfigError);
}

TEST_CASE("decomposed symbols collide with their composed forms") {
  // "a" + combining tilde vs the precomposed letter.
  std::istringstream in(
      "ã\tV\tcentral\tnearopen\n"
      "ã\tV\tcentral\tnearopen\n");
  CHECK_THROWS_AS(load_inventory(in), ConfigError);
}

TEST_CASE("malformed inventory rows are rejected") {
  std::istringstream missing_column("a\tV\tfront\n");
  CHECK_THROWS_AS(load_inventory(missing_column), ConfigError);
  std::istringstream bad_class("a\tX\tfront\topen\n");
  CHECK_THROWS_AS(load_inventory(bad_class), ConfigError);
  std::istringstream bad_feature("a\tV\tsideways\topen\n");
  CHECK_THROWS_AS(load_inventory(bad_feature), ConfigError);
}
