// tests/test_records_config.cpp
#include <sstream>

#include "doctest.h"
#include "fonorico/config.h"
#include "fonorico/records.h"
#include "fonorico/util.h"
#include "support/rng.h"

using namespace fonorico;

namespace {

TranscribedRecord random_record(testing::Rng& rng, std::size_t index) {
  const PhonemeInventory& inv = default_inventory();
  TranscribedRecord rec;
  rec.id = to_hex(rng.raw());
  rec.text = "frase número " + std::to_string(index) + " com acentuação";
  rec.tokens = {"frase", "número", std::to_string(index)};
  rec.sentence_type = static_cast<SentenceType>(rng.below(3));
  rec.source = "corpus-" + std::to_string(rng.below(4));
  std::size_t len = rng.below(30);
  for (std::size_t i = 0; i < len; ++i) {
    rec.phonemes.push_back(static_cast<PhonemeId>(rng.below(inv.size())));
  }
  rec.syllable_count = static_cast<std::uint32_t>(rng.below(20));
  if (rng.below(3) == 0) rec.failed_tokens = {"token-ruim"};
  return rec;
}

}  // namespace

TEST_CASE("transcribed records survive the JSONL round trip") {
  const PhonemeInventory& inv = default_inventory();
  testing::Rng rng(808);
  for (int i = 0; i < 100; ++i) {
    TranscribedRecord rec = random_record(rng, i);
    std::string line = to_jsonl(rec, inv);
    TranscribedRecord back = transcribed_record_from_json(line, 1, inv);
    CHECK(back.id == rec.id);
    CHECK(back.text == rec.text);
    CHECK(back.tokens == rec.tokens);
    CHECK(back.sentence_type == rec.sentence_type);
    CHECK(back.source == rec.source);
    CHECK(back.phonemes == rec.phonemes);
    CHECK(back.syllable_count == rec.syllable_count);
    CHECK(back.failed_tokens == rec.failed_tokens);
  }
}

TEST_CASE("trace entries survive the JSONL round trip") {
  testing::Rng rng(809);
  for (int i = 0; i < 50; ++i) {
    TraceEntry entry;
    entry.seq = static_cast<std::uint32_t>(i);
    entry.id = to_hex(rng.raw());
    entry.sentence_type = static_cast<SentenceType>(rng.below(3));
    for (auto& v : entry.new_by_category) {
      v = static_cast<std::uint32_t>(rng.below(9));
      entry.new_total += v;
    }
    entry.triphone_total = entry.new_total + 7;
    entry.score = double(entry.new_total);
    entry.reserve = rng.below(2) == 1;
    TraceEntry back = trace_entry_from_json(to_jsonl(entry), 1);
    CHECK(back.seq == entry.seq);
    CHECK(back.id == entry.id);
    CHECK(back.new_by_category == entry.new_by_category);
    CHECK(back.new_total == entry.new_total);
    CHECK(back.triphone_total == entry.triphone_total);
    CHECK(back.score == entry.score);
    CHECK(back.reserve == entry.reserve);
  }
}

TEST_CASE("schema errors carry the line number") {
  const PhonemeInventory& inv = default_inventory();
  try {
    transcribed_record_from_json("{\"id\": \"x\"}", 17, inv);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 17);
    CHECK(std::string(e.what()).find("17") != std::string::npos);
  }
  CHECK_THROWS_AS(sentence_record_from_json("not json", 3), SchemaError);
  CHECK_THROWS_AS(
      transcribed_record_from_json(
          R"({"id":"a","text":"t","tokens":[],"sentence_type":"declarative",)"
          R"("source":"s","phonemes":"q q","syllable_count":0,)"
          R"("failed_tokens":[]})",
          5, inv),
      SchemaError);
}

TEST_CASE("config files parse into the selection knobs") {
  std::istringstream in(
      "# pipeline configuration\n"
      "batch_size = 250\n"
      "phoneme_min_count = 3\n"
      "target_sentences = 500\n"
      "reserve_sentences = 100\n"
      "word_min = 5\n"
      "word_max = 25\n"
      "threshold_percentile = 0.4\n"
      "quota_declarative = 0.5\n"
      "quota_interrogative = 0.4\n"
      "quota_exclamative = 0.1\n"
      "weights_preset = rare_boosted\n"
      "weight_vcv = 3.5\n"
      "min_corpus_tokens = 123\n"
      "max_nonstandard_ratio = 0.25\n"
      "date_start = 1995-01-01\n"
      "date_end = 2020-06-30\n"
      "veto_patterns = sh, ck, zz\n"
      "workers = 4\n");
  PipelineConfig cfg = parse_config(in);
  CHECK(cfg.selection.batch_size == 250);
  CHECK(cfg.selection.phoneme_min_count == 3);
  CHECK(cfg.selection.target_sentences == 500);
  CHECK(cfg.selection.reserve_sentences == 100);
  CHECK(cfg.selection.word_min == 5);
  CHECK(cfg.selection.word_max == 25);
  CHECK(cfg.selection.threshold_percentile == 0.4);
  CHECK(cfg.selection.type_quotas[0] == 0.5);
  CHECK(cfg.selection.category_weights[size_t(TriphoneCategory::kVVV)] == 2);
  CHECK(cfg.selection.category_weights[size_t(TriphoneCategory::kVCV)] ==
        3.5);
  CHECK(cfg.selection.veto_patterns ==
        std::vector<std::string>{"sh", "ck", "zz"});
  CHECK(cfg.exclusion.min_corpus_tokens == 123);
  CHECK(cfg.exclusion.date_start.year == 1995);
  CHECK(cfg.workers == 4);
}

TEST_CASE("invalid configs are rejected") {
  std::istringstream bad_quotas(
      "quota_declarative = 0.9\n"
      "quota_interrogative = 0.9\n"
      "quota_exclamative = 0.1\n");
  CHECK_THROWS_AS(parse_config(bad_quotas), ConfigError);

  std::istringstream unknown("no_such_key = 1\n");
  CHECK_THROWS_AS(parse_config(unknown), ConfigError);

  std::istringstream bad_value("batch_size = many\n");
  CHECK_THROWS_AS(parse_config(bad_value), ConfigError);

  std::istringstream bad_bounds("word_min = 9\nword_max = 3\n");
  CHECK_THROWS_AS(parse_config(bad_bounds), ConfigError);
}

TEST_CASE("the example config mirrors the built-in defaults") {
  PipelineConfig from_file = load_config_file(
      std::string(FONORICO_SOURCE_DIR) + "/data/pipeline_example.conf");
  PipelineConfig defaults;
  CHECK(from_file.selection.batch_size == defaults.selection.batch_size);
  CHECK(from_file.selection.phoneme_min_count ==
        defaults.selection.phoneme_min_count);
  CHECK(from_file.selection.target_sentences ==
        defaults.selection.target_sentences);
  CHECK(from_file.selection.type_quotas == defaults.selection.type_quotas);
  CHECK(from_file.selection.category_weights ==
        defaults.selection.category_weights);
  CHECK(from_file.selection.veto_patterns ==
        defaults.selection.veto_patterns);
  CHECK(from_file.exclusion.min_corpus_tokens ==
        defaults.exclusion.min_corpus_tokens);
  CHECK(from_file.exclusion.date_start == defaults.exclusion.date_start);
  CHECK(from_file.exclusion.date_end == defaults.exclusion.date_end);
}

TEST_CASE("selection config validation") {
  SelectionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.batch_size = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SelectionConfig{};
  cfg.type_quotas = {0.5, 0.5, 0.5};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
