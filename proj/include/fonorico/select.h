// include/fonorico/select.h
//
// Greedy batch selection of sentences maximizing per-category
// new-triphone coverage under phoneme-coverage, length, quota and
// threshold constraints. Deterministic: output is a pure function of
// (input order, config, ruleset).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fonorico/ingest.h"
#include "fonorico/inventory.h"
#include "fonorico/triphone.h"

namespace fonorico {

// A sentence record together with its phoneme stream.
struct TranscribedRecord {
  std::string id;
  std::string text;
  std::vector<std::string> tokens;
  SentenceType sentence_type = SentenceType::kDeclarative;
  std::string source;
  std::vector<PhonemeId> phonemes;
  std::uint32_t syllable_count = 0;
  std::vector<std::string> failed_tokens;
};

struct SelectionConfig {
  std::uint32_t batch_size = 5000;
  std::uint32_t phoneme_min_count = 10;
  std::array<double, kSentenceTypeCount> type_quotas{0.6, 0.3, 0.1};
  std::uint32_t word_min = 10;
  std::uint32_t word_max = 20;
  std::uint32_t target_sentences = 10000;
  std::uint32_t reserve_sentences = 2000;
  double threshold_percentile = 0.5;
  std::array<double, kCategoryCount> category_weights{1, 1, 1, 1, 1, 1, 1, 1};
  bool quotas_per_source = false;
  // Case-folded substrings alien to the orthography; sentences whose
  // tokens contain one are vetoed by the phonotactic post-filter.
  std::vector<std::string> veto_patterns{"sh", "ck", "ph", "w", "y"};

  // Boosts the rare categories (VVV, CCC) 2x.
  static std::array<double, kCategoryCount> rare_boosted_weights() {
    return {2, 1, 1, 1, 1, 1, 1, 2};
  }

  // Throws ConfigError when quotas do not sum to 1, word bounds are
  // inverted, or batch_size is 0.
  void validate() const;

  std::uint32_t selection_cap() const {
    return target_sentences + reserve_sentences;
  }
  std::uint64_t type_cap(SentenceType t) const {
    return static_cast<std::uint64_t>(
        type_quotas[static_cast<std::size_t>(t)] * selection_cap());
  }
};

struct TraceEntry {
  std::uint32_t seq = 0;  // acceptance order, 0-based
  std::string id;
  SentenceType sentence_type = SentenceType::kDeclarative;
  std::array<std::uint32_t, kCategoryCount> new_by_category{};
  std::uint32_t new_total = 0;
  std::uint32_t triphone_total = 0;  // all windows of the sentence
  double score = 0.0;
  bool reserve = false;
};

struct SelectedRecord {
  std::string id;
  std::string text;
  SentenceType sentence_type = SentenceType::kDeclarative;
  std::string source;
  std::vector<PhonemeId> phonemes;
  std::array<std::uint32_t, kCategoryCount> new_by_category{};
  bool reserve = false;
};

class SelectionState {
 public:
  SelectionState(const PhonemeInventory& inv, const SelectionConfig& cfg);

  const TriphoneInventory& inventory() const { return inventory_; }
  const std::vector<SelectedRecord>& selected() const { return selected_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::vector<std::string> selected_ids() const;

  std::uint64_t type_count(SentenceType t) const {
    return per_type_counts_[static_cast<std::size_t>(t)];
  }
  std::uint64_t phoneme_count(PhonemeId id) const {
    return phoneme_counts_[id];
  }
  const std::vector<std::uint64_t>& phoneme_counts() const {
    return phoneme_counts_;
  }
  std::uint32_t selected_count() const {
    return static_cast<std::uint32_t>(selected_.size());
  }

  bool quota_headroom(const TranscribedRecord& rec) const;

  // Unconditional acceptance: updates inventory, counts and trace.
  // Returns the contribution recorded in the trace.
  NewContribution accept(const TranscribedRecord& rec);

  const PhonemeInventory& phoneme_inventory() const { return *inv_; }
  const SelectionConfig& config() const { return cfg_; }

 private:
  const PhonemeInventory* inv_;
  SelectionConfig cfg_;
  TriphoneInventory inventory_;
  std::vector<SelectedRecord> selected_;
  std::vector<TraceEntry> trace_;
  std::array<std::uint64_t, kSentenceTypeCount> per_type_counts_{};
  std::vector<std::uint64_t> phoneme_counts_;
  std::unordered_map<std::string, std::array<std::uint64_t,
                                             kSentenceTypeCount>>
      per_source_counts_;
};

struct ScoredContribution {
  std::array<std::uint32_t, kCategoryCount> per_category{};
  double score = 0.0;
};

// Pure: previously-unseen triphones per category (de-duplicated within
// the sentence) and their weighted sum.
ScoredContribution score_contribution(std::span<const Triphone> triphones,
                                      const SelectionState& state,
                                      const SelectionConfig& cfg);

struct AcceptanceThresholds {
  std::array<std::uint32_t, kCategoryCount> per_category{};
  double score = 0.0;
};

// Empirical quantile: sorted ascending, index floor(p * (n - 1)).
// Throws std::invalid_argument on an empty batch.
AcceptanceThresholds compute_thresholds(
    std::span<const ScoredContribution> batch_scores,
    const SelectionConfig& cfg);

struct DropReasons {
  std::uint64_t untranscribable = 0;
  std::uint64_t proper_noun = 0;
  std::uint64_t veto_pattern = 0;
};

// Post-filter for phonotactically alien material: untranscribable
// tokens, capitalized non-sentence-initial tokens that fail lexicon
// lookup (proper-noun heuristic), and configured orthographic veto
// patterns. Returns true when the sentence is kept.
bool phonotactic_postfilter(const TranscribedRecord& rec,
                            const SelectionConfig& cfg,
                            DropReasons* reasons = nullptr);

struct CoverageReport {
  bool covered = false;
  std::vector<std::string> uncovered_symbols;
  std::uint32_t accepted = 0;
};

// First selection step: scans candidates in stream order, accepting a
// sentence iff it contains a phoneme still below phoneme_min_count.
// Stops once every phoneme reaches the threshold.
CoverageReport phoneme_coverage_pass(std::span<const TranscribedRecord> batch,
                                     SelectionState& state,
                                     const SelectionConfig& cfg);

// One greedy batch: scores all sentences against the state at batch
// start, derives quantile thresholds, then walks candidates in
// descending initial-score order (ties by id ascending) re-scoring
// each against the live state. Returns the number accepted.
std::uint32_t select_batch(std::span<const TranscribedRecord> batch,
                           SelectionState& state, const SelectionConfig& cfg);

// Rewindable record stream so the coverage pass and the batch phase
// can traverse the input independently without buffering it.
class TranscribedSource {
 public:
  virtual ~TranscribedSource() = default;
  virtual void rewind() = 0;
  virtual bool next(TranscribedRecord& out) = 0;
};

class VectorSource final : public TranscribedSource {
 public:
  explicit VectorSource(std::vector<TranscribedRecord> records)
      : records_(std::move(records)) {}
  void rewind() override { pos_ = 0; }
  bool next(TranscribedRecord& out) override {
    if (pos_ >= records_.size()) return false;
    out = records_[pos_++];
    return true;
  }

 private:
  std::vector<TranscribedRecord> records_;
  std::size_t pos_ = 0;
};

struct SelectionResult {
  std::vector<SelectedRecord> records;
  std::vector<TraceEntry> trace;
  std::array<CategoryCounts, kCategoryCount> per_category{};
  std::uint64_t distinct_triphones = 0;
  std::uint64_t total_triphones = 0;
  std::array<std::uint64_t, kSentenceTypeCount> per_type{};
  CoverageReport coverage;
  std::uint32_t shortfall = 0;  // target_sentences minus accepted, if short
  DropReasons postfilter_drops;
  std::uint64_t ineligible_length = 0;
};

// Full pipeline over a source: eligibility filters, coverage pass,
// then repeated select_batch over successive batches until the target
// plus reserve is reached or the stream is exhausted.
SelectionResult run_selection(TranscribedSource& source,
                              const PhonemeInventory& inv,
                              const SelectionConfig& cfg);

}  // namespace fonorico
