// include/fonorico/g2p.h
//
// Rule-based grapheme-to-phoneme conversion. Rules are contextual
// rewrites applied per token, longest match first; the per-token
// phoneme sequences are concatenated into one sentence-level stream
// with no boundary markers, so triphones cross word boundaries.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fonorico/inventory.h"

namespace fonorico {

struct TranscriptionRule {
  std::u32string pattern;        // literal orthography, case-folded
  std::u32string left_context;   // empty = unconstrained
  std::u32string right_context;  // empty = unconstrained
  std::vector<PhonemeId> output;
  int priority = 0;
};

// Immutable after load; shared across worker threads.
class Ruleset {
 public:
  // Parses the line-oriented rule format (see data/g2p_saopaulo.rules).
  // Every output symbol must exist in the inventory.
  static Ruleset parse(std::istream& in, const PhonemeInventory& inv);
  static Ruleset parse_string(std::string_view text,
                              const PhonemeInventory& inv);
  static Ruleset load_file(const std::string& path,
                           const PhonemeInventory& inv);

  // The embedded Sao Paulo ruleset over the default inventory.
  static std::shared_ptr<const Ruleset> builtin();

  // Same rule text resolved against a custom inventory; every output
  // symbol must still resolve.
  static Ruleset builtin_for(const PhonemeInventory& inv);

  const std::string& version() const { return version_; }
  std::size_t rule_count() const { return rules_.size(); }

  // Rule indices applicable at a given first code point, ordered by
  // (pattern length desc, priority desc, file order).
  const std::vector<std::uint32_t>* bucket(char32_t first) const;
  const TranscriptionRule& rule(std::uint32_t idx) const {
    return rules_[idx];
  }

 private:
  std::string version_;
  std::vector<TranscriptionRule> rules_;
  std::unordered_map<char32_t, std::vector<std::uint32_t>> buckets_;
};

struct Transcription {
  std::vector<PhonemeId> phonemes;
  // Half-open [begin, end) phoneme range per input token; failed
  // tokens have empty ranges.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> token_spans;
  std::vector<std::string> failed_tokens;
  std::uint32_t syllable_count = 0;

  bool complete() const { return failed_tokens.empty(); }
};

// Applies a ruleset over tokens. Instances are cheap views over a
// shared ruleset; the internal token cache makes them single-threaded.
class Transcriber {
 public:
  Transcriber(std::shared_ptr<const Ruleset> rules,
              const PhonemeInventory& inv);

  // Per-token longest-match conversion; failed tokens are listed and
  // their positions skipped.
  Transcription transcribe(std::span<const std::string> tokens) const;

  // Single-token probe used by the ingest misspelling filter.
  bool can_transcribe(std::string_view token) const;

  const PhonemeInventory& inventory() const { return *inv_; }
  const Ruleset& ruleset() const { return *rules_; }

 private:
  // Null when the token fails (some position has no applicable rule).
  const std::vector<PhonemeId>* lookup(std::string_view token) const;

  std::shared_ptr<const Ruleset> rules_;
  const PhonemeInventory* inv_;

  struct CacheEntry {
    std::vector<PhonemeId> phonemes;
    bool ok = false;
  };
  mutable std::unordered_map<std::string, CacheEntry> cache_;
};

// Syllable nuclei of a phoneme stream: every vocoid counts unless it
// is ɪ or ʊ immediately after another vocoid (falling diphthong, the
// pair counts once).
std::uint32_t count_syllables(std::span<const PhonemeId> phonemes,
                              const PhonemeInventory& inv);

}  // namespace fonorico
