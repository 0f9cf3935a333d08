// src/select.cpp
#include "fonorico/select.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fonorico/g2p.h"
#include "fonorico/utf8.h"
#include "fonorico/util.h"

namespace fonorico {

void SelectionConfig::validate() const {
  double quota_sum = 0;
  for (double q : type_quotas) {
    if (q < 0) throw ConfigError("sentence-type quotas must be nonnegative");
    quota_sum += q;
  }
  if (std::abs(quota_sum - 1.0) > 1e-9) {
    throw ConfigError("sentence-type quotas must sum to 1");
  }
  if (word_min > word_max) {
    throw ConfigError("word_min must not exceed word_max");
  }
  if (batch_size == 0) throw ConfigError("batch_size must be positive");
  if (threshold_percentile < 0 || threshold_percentile > 1) {
    throw ConfigError("threshold_percentile must be in [0, 1]");
  }
  for (double w : category_weights) {
    if (w < 0) throw ConfigError("category weights must be nonnegative");
  }
}

SelectionState::SelectionState(const PhonemeInventory& inv,
                               const SelectionConfig& cfg)
    : inv_(&inv),
      cfg_(cfg),
      inventory_(inv),
      phoneme_counts_(inv.size(), 0) {
  cfg_.validate();
}

std::vector<std::string> SelectionState::selected_ids() const {
  std::vector<std::string> ids;
  ids.reserve(selected_.size());
  for (const auto& rec : selected_) ids.push_back(rec.id);
  return ids;
}

bool SelectionState::quota_headroom(const TranscribedRecord& rec) const {
  std::size_t t = static_cast<std::size_t>(rec.sentence_type);
  if (cfg_.quotas_per_source) {
    auto it = per_source_counts_.find(rec.source);
    std::uint64_t count = it == per_source_counts_.end() ? 0 : it->second[t];
    return count < cfg_.type_cap(rec.sentence_type);
  }
  return per_type_counts_[t] < cfg_.type_cap(rec.sentence_type);
}

NewContribution SelectionState::accept(const TranscribedRecord& rec) {
  std::vector<Triphone> triphones = extract(rec.phonemes);
  NewContribution contribution = inventory_.add(triphones);

  std::size_t t = static_cast<std::size_t>(rec.sentence_type);
  ++per_type_counts_[t];
  if (cfg_.quotas_per_source) ++per_source_counts_[rec.source][t];
  for (PhonemeId id : rec.phonemes) ++phoneme_counts_[id];

  bool reserve = selected_.size() >= cfg_.target_sentences;

  TraceEntry entry;
  entry.seq = static_cast<std::uint32_t>(trace_.size());
  entry.id = rec.id;
  entry.sentence_type = rec.sentence_type;
  entry.new_by_category = contribution.by_category;
  entry.new_total = contribution.total();
  entry.triphone_total = static_cast<std::uint32_t>(triphones.size());
  double score = 0;
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    score += cfg_.category_weights[c] * contribution.by_category[c];
  }
  entry.score = score;
  entry.reserve = reserve;
  trace_.push_back(entry);

  SelectedRecord selected;
  selected.id = rec.id;
  selected.text = rec.text;
  selected.sentence_type = rec.sentence_type;
  selected.source = rec.source;
  selected.phonemes = rec.phonemes;
  selected.new_by_category = contribution.by_category;
  selected.reserve = reserve;
  selected_.push_back(std::move(selected));

  return contribution;
}

ScoredContribution score_contribution(std::span<const Triphone> triphones,
                                      const SelectionState& state,
                                      const SelectionConfig& cfg) {
  ScoredContribution out;
  const TriphoneInventory& inv = state.inventory();
  // De-duplicate within the sentence without an allocation-heavy set:
  // the stream is short, a linear backward scan is cheap.
  std::vector<std::uint32_t> seen;
  seen.reserve(triphones.size());
  for (const Triphone& t : triphones) {
    if (inv.contains(t)) continue;
    std::uint32_t key = t.key();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    ++out.per_category[static_cast<std::size_t>(inv.categorize(t))];
  }
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    out.score += cfg.category_weights[c] * out.per_category[c];
  }
  return out;
}

namespace {

// Empirical quantile of an unsorted copy: ascending order, index
// floor(p * (n - 1)).
template <typename T>
T quantile(std::vector<T> values, double p) {
  std::sort(values.begin(), values.end());
  std::size_t idx = static_cast<std::size_t>(p * double(values.size() - 1));
  if (idx >= values.size()) idx = values.size() - 1;
  return values[idx];
}

}  // namespace

AcceptanceThresholds compute_thresholds(
    std::span<const ScoredContribution> batch_scores,
    const SelectionConfig& cfg) {
  if (batch_scores.empty()) {
    throw std::invalid_argument("compute_thresholds: empty batch");
  }
  AcceptanceThresholds out;
  std::vector<std::uint32_t> column(batch_scores.size());
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    for (std::size_t i = 0; i < batch_scores.size(); ++i) {
      column[i] = batch_scores[i].per_category[c];
    }
    out.per_category[c] = quantile(column, cfg.threshold_percentile);
  }
  std::vector<double> scores(batch_scores.size());
  for (std::size_t i = 0; i < batch_scores.size(); ++i) {
    scores[i] = batch_scores[i].score;
  }
  out.score = quantile(std::move(scores), cfg.threshold_percentile);
  return out;
}

bool phonotactic_postfilter(const TranscribedRecord& rec,
                            const SelectionConfig& cfg, DropReasons* reasons) {
  if (!rec.failed_tokens.empty()) {
    // Distinguish the proper-noun case for the drop stats: a failed
    // token that is capitalized and not sentence-initial.
    bool proper_noun = false;
    for (const std::string& failed : rec.failed_tokens) {
      if (!rec.tokens.empty() && failed == rec.tokens.front()) continue;
      std::size_t i = 0;
      char32_t first = utf8::decode(failed, i);
      if (utf8::is_uppercase_letter(first)) {
        proper_noun = true;
        break;
      }
    }
    if (reasons != nullptr) {
      if (proper_noun) {
        ++reasons->proper_noun;
      } else {
        ++reasons->untranscribable;
      }
    }
    return false;
  }
  for (const std::string& token : rec.tokens) {
    std::string folded = utf8::fold_case(token);
    for (const std::string& pattern : cfg.veto_patterns) {
      if (!pattern.empty() && folded.find(pattern) != std::string::npos) {
        if (reasons != nullptr) ++reasons->veto_pattern;
        return false;
      }
    }
  }
  return true;
}

CoverageReport phoneme_coverage_pass(std::span<const TranscribedRecord> batch,
                                     SelectionState& state,
                                     const SelectionConfig& cfg) {
  CoverageReport report;
  const PhonemeInventory& inv = state.phoneme_inventory();

  auto all_covered = [&]() {
    for (std::size_t id = 0; id < inv.size(); ++id) {
      if (state.phoneme_count(static_cast<PhonemeId>(id)) <
          cfg.phoneme_min_count)
        return false;
    }
    return true;
  };

  report.covered = all_covered();
  for (const TranscribedRecord& rec : batch) {
    if (report.covered) break;
    if (state.selected_count() >= cfg.selection_cap()) break;
    bool helps = false;
    for (PhonemeId id : rec.phonemes) {
      if (state.phoneme_count(id) < cfg.phoneme_min_count) {
        helps = true;
        break;
      }
    }
    if (!helps || !state.quota_headroom(rec)) continue;
    state.accept(rec);
    ++report.accepted;
    report.covered = all_covered();
  }

  if (!report.covered) {
    for (std::size_t id = 0; id < inv.size(); ++id) {
      if (state.phoneme_count(static_cast<PhonemeId>(id)) <
          cfg.phoneme_min_count) {
        report.uncovered_symbols.push_back(
            inv.symbol_of(static_cast<PhonemeId>(id)));
      }
    }
  }
  return report;
}

std::uint32_t select_batch(std::span<const TranscribedRecord> batch,
                           SelectionState& state,
                           const SelectionConfig& cfg) {
  if (batch.empty()) return 0;

  struct Scored {
    const TranscribedRecord* rec;
    std::vector<Triphone> triphones;
    ScoredContribution initial;
  };
  std::vector<Scored> scored;
  scored.reserve(batch.size());
  std::vector<ScoredContribution> initial_scores;
  initial_scores.reserve(batch.size());
  for (const TranscribedRecord& rec : batch) {
    Scored s;
    s.rec = &rec;
    s.triphones = extract(rec.phonemes);
    s.initial = score_contribution(s.triphones, state, cfg);
    initial_scores.push_back(s.initial);
    scored.push_back(std::move(s));
  }

  AcceptanceThresholds thresholds = compute_thresholds(initial_scores, cfg);

  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.initial.score != b.initial.score)
      return a.initial.score > b.initial.score;
    return a.rec->id < b.rec->id;
  });

  std::uint32_t accepted = 0;
  for (const Scored& s : scored) {
    if (state.selected_count() >= cfg.selection_cap()) break;
    ScoredContribution live = score_contribution(s.triphones, state, cfg);
    if (live.score <= 0) continue;
    if (live.score < thresholds.score) continue;
    bool meets = true;
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
      if (live.per_category[c] < thresholds.per_category[c]) {
        meets = false;
        break;
      }
    }
    if (!meets) continue;
    if (!state.quota_headroom(*s.rec)) continue;
    state.accept(*s.rec);
    ++accepted;
  }
  return accepted;
}

SelectionResult run_selection(TranscribedSource& source,
                              const PhonemeInventory& inv,
                              const SelectionConfig& cfg) {
  cfg.validate();
  SelectionState state(inv, cfg);
  SelectionResult result;

  auto eligible = [&cfg](const TranscribedRecord& rec,
                         std::uint64_t* length_drops, DropReasons* reasons) {
    std::size_t words = rec.tokens.size();
    if (words < cfg.word_min || words > cfg.word_max) {
      if (length_drops != nullptr) ++*length_drops;
      return false;
    }
    return phonotactic_postfilter(rec, cfg, reasons);
  };

  // Pass 1: phoneme coverage over the stream, chunked so memory stays
  // bounded; the pass stops as soon as every phoneme is covered.
  // Pass 2 revisits everything, so drop statistics are taken there.
  std::unordered_set<std::string> accepted_ids;
  {
    source.rewind();
    std::vector<TranscribedRecord> chunk;
    chunk.reserve(cfg.batch_size);
    TranscribedRecord rec;
    std::uint32_t coverage_accepted = 0;
    bool covered = false;
    while (!covered && source.next(rec)) {
      if (!eligible(rec, nullptr, nullptr)) continue;
      chunk.push_back(std::move(rec));
      if (chunk.size() >= cfg.batch_size) {
        result.coverage = phoneme_coverage_pass(chunk, state, cfg);
        coverage_accepted += result.coverage.accepted;
        covered = result.coverage.covered;
        chunk.clear();
      }
    }
    if (!covered) {
      result.coverage = phoneme_coverage_pass(chunk, state, cfg);
      coverage_accepted += result.coverage.accepted;
    }
    result.coverage.accepted = coverage_accepted;
    for (const auto& sel : state.selected()) accepted_ids.insert(sel.id);
  }

  // Pass 2: greedy batches over the remaining stream.
  {
    source.rewind();
    std::vector<TranscribedRecord> batch;
    batch.reserve(cfg.batch_size);
    TranscribedRecord rec;
    bool done = state.selected_count() >= cfg.selection_cap();
    while (!done && source.next(rec)) {
      if (accepted_ids.contains(rec.id)) continue;
      if (!eligible(rec, &result.ineligible_length,
                    &result.postfilter_drops)) {
        continue;
      }
      batch.push_back(std::move(rec));
      if (batch.size() >= cfg.batch_size) {
        select_batch(batch, state, cfg);
        batch.clear();
        done = state.selected_count() >= cfg.selection_cap();
      }
    }
    if (!done && !batch.empty()) {
      select_batch(batch, state, cfg);
    }
  }

  result.records = state.selected();
  result.trace = state.trace();
  result.per_category = state.inventory().per_category();
  result.distinct_triphones = state.inventory().distinct_count();
  result.total_triphones = state.inventory().total_count();
  for (std::size_t t = 0; t < kSentenceTypeCount; ++t) {
    result.per_type[t] = state.type_count(static_cast<SentenceType>(t));
  }
  if (state.selected_count() < cfg.target_sentences) {
    result.shortfall = cfg.target_sentences - state.selected_count();
  }
  return result;
}

}  // namespace fonorico
