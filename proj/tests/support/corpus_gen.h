// tests/support/corpus_gen.h
//
// Deterministic synthetic Portuguese corpus for desk-scale selection
// experiments: Zipf-weighted sampling over an embedded vocabulary,
// 10-20 word sentences, mixed sentence types.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fonorico::testing {

std::span<const char* const> vocabulary();

struct GeneratedSentence {
  std::string text;  // capitalized, terminal punctuation attached
};

std::vector<GeneratedSentence> generate_corpus(std::size_t sentences,
                                               std::uint64_t seed,
                                               std::size_t words_min = 10,
                                               std::size_t words_max = 20);

}  // namespace fonorico::testing
