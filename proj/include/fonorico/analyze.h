// include/fonorico/analyze.h
//
// Richness metrics, corpus comparison, the new-triphones-per-sentence
// series and its variance-stabilization changepoint, and recording
// duration estimates.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fonorico/select.h"
#include "fonorico/triphone.h"

namespace fonorico {

struct CategoryRichness {
  std::uint64_t distinct = 0;
  std::uint64_t total = 0;
};

struct RichnessReport {
  std::string name;
  std::uint64_t distinct = 0;
  std::uint64_t total = 0;
  std::array<CategoryRichness, kCategoryCount> per_category{};

  bool defined() const { return total > 0; }
  double ratio_percent() const {
    return total == 0 ? 0.0 : 100.0 * double(distinct) / double(total);
  }
};

RichnessReport richness(const TriphoneInventory& inv,
                        const std::string& name = "");

// distinct/total as a percentage, 2 decimals, half-even rounding
// ("--" when total is 0).
std::string render_percent(std::uint64_t distinct, std::uint64_t total);

// Signed percentage with one decimal, e.g. "+55.8%".
std::string render_gain(double fraction);

struct ComparisonRow {
  std::string name;
  std::uint64_t distinct = 0;
  std::uint64_t total = 0;
  double gain = 0.0;  // (distinct - baseline distinct) / baseline distinct
  bool is_baseline = false;
};

// Relative distinct-triphone gain of each report over the named
// baseline. Throws ConfigError when the baseline is missing.
std::vector<ComparisonRow> compare(std::span<const RichnessReport> reports,
                                   const std::string& baseline);

std::string render_comparison(std::span<const ComparisonRow> rows);
std::string render_richness_table(std::span<const RichnessReport> reports);
std::string render_category_table(const RichnessReport& report);

struct NewTriphoneSeries {
  std::vector<double> per_sentence;     // new triphones of i-th acceptance
  std::vector<double> cumulative_mean;  // mean of the first i+1 entries
};

NewTriphoneSeries new_triphone_series(std::span<const TraceEntry> trace);

inline constexpr double kInclanTiaoCritical95 = 1.358;

struct SaturationResult {
  std::optional<std::uint32_t> changepoint_index;  // in [1, T-1], 1-based
  double statistic = 0.0;
  double critical_value = kInclanTiaoCritical95;
  std::uint32_t series_length = 0;
};

// Cumulative sum of squares changepoint test: C_k = sum of x_i^2 for
// i <= k, D_k = C_k/C_T - k/T, statistic = max |D_k| * sqrt(T/2). The
// changepoint is reported iff the statistic exceeds the critical
// value. Throws std::invalid_argument for series shorter than 3; a
// zero-energy series yields statistic 0 and no changepoint.
SaturationResult variance_changepoint(std::span<const double> series,
                                      double critical_value =
                                          kInclanTiaoCritical95);

// |D_k| for k = 1 .. T-1, the plottable drift behind the test; its
// maximum times sqrt(T/2) is the statistic. Empty for zero-energy
// series.
std::vector<double> cusum_drift(std::span<const double> series);

// Changepoint of the new-triphone series; the index is the
// recommended batch size.
SaturationResult saturation_point(std::span<const TraceEntry> trace,
                                  double critical_value =
                                      kInclanTiaoCritical95);

enum class SyllableBasis : std::uint8_t { kAverageFour, kPhonemicCount };

struct DurationEstimate {
  std::uint64_t token_count = 0;
  SyllableBasis basis = SyllableBasis::kAverageFour;
  double seconds = 0.0;
  double hours = 0.0;
};

// Speech-rate model: 6 syllables per second. AverageFour assumes 4
// syllables per word; PhonemicCount sums transcription syllables.
DurationEstimate estimate_duration(std::uint64_t token_count,
                                   SyllableBasis basis,
                                   std::span<const std::uint32_t>
                                       syllable_counts = {});

}  // namespace fonorico
