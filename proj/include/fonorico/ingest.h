// include/fonorico/ingest.h
//
// Streaming corpus ingestion: cleaning, sentence segmentation,
// tokenization, sentence-type classification and the exclusion
// filters. Designed so that memory stays bounded by a constant number
// of in-flight records regardless of corpus size.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fonorico {

struct CalendarDate {
  int year = 0;
  int month = 1;
  int day = 1;

  auto operator<=>(const CalendarDate&) const = default;

  // "YYYY-MM-DD" or "YYYY"; nullopt when unparseable.
  static std::optional<CalendarDate> parse(std::string_view s);
  std::string to_string() const;
};

struct RawDocument {
  std::string text;
  std::string source;
  std::string genre;  // empty = unannotated
  std::optional<CalendarDate> date;
  std::uint64_t offset = 0;  // position of the document in its source
};

enum class SentenceType : std::uint8_t {
  kDeclarative = 0,
  kInterrogative,
  kExclamative,
};

inline constexpr std::size_t kSentenceTypeCount = 3;

std::string_view to_string(SentenceType t);
SentenceType sentence_type_from_string(std::string_view s);

struct SentenceRecord {
  std::string id;  // hash of (source, byte offset, text); stable across runs
  std::string text;
  std::vector<std::string> tokens;
  SentenceType sentence_type = SentenceType::kDeclarative;
  std::string source;

  std::size_t word_count() const { return tokens.size(); }
};

// Normalizes whitespace, strips markup tags and control characters,
// composes combining sequences. Idempotent.
std::string clean(std::string_view text);

// Words only: punctuation is detached from chunk edges; hyphenated
// clitics stay one token.
std::vector<std::string> tokenize(std::string_view text);

// Trailing '?' wins over '!'; everything else is declarative.
SentenceType classify_sentence_type(std::string_view text);

// Splits cleaned text on sentence-terminal punctuation (. ? ! …) with
// abbreviation and decimal-number protection. Unsplittable text yields
// a single record. Records with no word tokens are dropped.
std::vector<SentenceRecord> segment(const RawDocument& doc);

struct ExclusionCriteria {
  std::unordered_set<std::string> blocklist;  // case-folded forms
  std::uint64_t min_corpus_tokens = 5000;
  double max_nonstandard_ratio = 0.10;
  CalendarDate date_start{1990, 1, 1};
  CalendarDate date_end{2023, 12, 31};
};

// Loads one token per line, '#' comments, case-folded.
std::unordered_set<std::string> load_blocklist(const std::string& path);

struct DropCounts {
  std::uint64_t corpus_too_small = 0;
  std::uint64_t date_out_of_range = 0;  // documents
  std::uint64_t blocklisted = 0;        // records
  std::uint64_t nonstandard = 0;        // records
  std::uint64_t empty = 0;              // records with no tokens
  std::uint64_t kept = 0;
};

// Pure per-record / per-document predicates over the criteria; the
// counters make the per-filter drop stats.
class ExclusionFilter {
 public:
  using TokenPredicate = std::function<bool(std::string_view)>;

  // `can_transcribe` backs the misspelling proxy: the fraction of
  // tokens it rejects must stay within max_nonstandard_ratio.
  ExclusionFilter(ExclusionCriteria criteria, TokenPredicate can_transcribe);

  // Whole-corpus gate: token count over the full source corpus.
  bool corpus_admissible(std::uint64_t corpus_token_count);

  // Documents without a date pass (permissive on missing metadata).
  bool document_admissible(const RawDocument& doc);

  bool record_admissible(const SentenceRecord& rec);

  const DropCounts& drops() const { return drops_; }

 private:
  ExclusionCriteria criteria_;
  TokenPredicate can_transcribe_;
  DropCounts drops_;
};

// Convenience composition for vector-based callers: applies the
// record-level filters, or drops everything when the corpus itself is
// inadmissible.
std::vector<SentenceRecord> apply_exclusions(
    const std::vector<SentenceRecord>& records,
    const ExclusionCriteria& criteria, std::uint64_t corpus_token_count,
    ExclusionFilter::TokenPredicate can_transcribe, DropCounts* drops = nullptr);

// Splits a plain-text file into documents at blank lines; the whole
// file is one document when it has no blank-line separators.
// `on_document` is invoked per document, keeping memory bounded.
void read_plaintext_documents(
    const std::string& path, const std::string& source,
    const std::function<void(RawDocument&&)>& on_document);

std::string make_sentence_id(std::string_view source, std::uint64_t offset,
                             std::string_view text);

}  // namespace fonorico
