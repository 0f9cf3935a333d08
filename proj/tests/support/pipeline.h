// tests/support/pipeline.h
//
// Small glue shared by the selection tests and the acceptance suite.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "fonorico/g2p.h"
#include "fonorico/ingest.h"
#include "fonorico/select.h"
#include "support/corpus_gen.h"

namespace fonorico::testing {

inline TranscribedRecord make_transcribed(const std::string& text,
                                          const std::string& source,
                                          std::uint64_t offset,
                                          const Transcriber& transcriber) {
  TranscribedRecord rec;
  rec.text = text;
  rec.tokens = tokenize(text);
  rec.sentence_type = classify_sentence_type(text);
  rec.source = source;
  rec.id = make_sentence_id(source, offset, text);
  Transcription t = transcriber.transcribe(rec.tokens);
  rec.phonemes = std::move(t.phonemes);
  rec.syllable_count = t.syllable_count;
  rec.failed_tokens = std::move(t.failed_tokens);
  return rec;
}

inline std::vector<TranscribedRecord> transcribe_corpus(
    std::span<const GeneratedSentence> sentences, const std::string& source,
    const Transcriber& transcriber) {
  std::vector<TranscribedRecord> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    out.push_back(
        make_transcribed(sentences[i].text, source, i, transcriber));
  }
  return out;
}

// An inventory with exactly the requested distinct/total counts; the
// first triphone absorbs the repeat mass.
inline TriphoneInventory make_synthetic_inventory(std::uint64_t distinct,
                                                  std::uint64_t total) {
  const PhonemeInventory& inv = default_inventory();
  TriphoneInventory out(inv);
  std::vector<Triphone> batch;
  batch.reserve(total);
  std::uint64_t emitted = 0;
  for (PhonemeId a = 0; a < inv.size() && emitted < distinct; ++a) {
    for (PhonemeId b = 0; b < inv.size() && emitted < distinct; ++b) {
      for (PhonemeId c = 0; c < inv.size() && emitted < distinct; ++c) {
        batch.push_back(Triphone{a, b, c});
        if (emitted == 0) {
          for (std::uint64_t r = 0; r < total - distinct; ++r) {
            batch.push_back(Triphone{a, b, c});
          }
        }
        ++emitted;
      }
    }
  }
  out.add(batch);
  return out;
}

}  // namespace fonorico::testing
