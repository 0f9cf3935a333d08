// src/analyze.cpp
#include "fonorico/analyze.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fonorico/util.h"

namespace fonorico {

RichnessReport richness(const TriphoneInventory& inv,
                        const std::string& name) {
  RichnessReport report;
  report.name = name;
  report.distinct = inv.distinct_count();
  report.total = inv.total_count();
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    const CategoryCounts& counts =
        inv.category(static_cast<TriphoneCategory>(c));
    report.per_category[c] = CategoryRichness{counts.distinct, counts.total};
  }
  return report;
}

namespace {

// Half-even rounding of a nonnegative rational percentage to two
// decimals, in exact integer arithmetic: round(10000 * d / t) with
// ties going to the even quotient.
std::string percent_2dp(std::uint64_t distinct, std::uint64_t total) {
  unsigned long long num =
      static_cast<unsigned long long>(distinct) * 10000ull;
  unsigned long long q = num / total;
  unsigned long long r = num % total;
  unsigned long long twice = 2ull * r;
  if (twice > total || (twice == total && (q % 2ull) == 1ull)) ++q;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%02llu", q / 100ull, q % 100ull);
  return buf;
}

}  // namespace

std::string render_percent(std::uint64_t distinct, std::uint64_t total) {
  if (total == 0) return "--";
  return percent_2dp(distinct, total) + "%";
}

std::string render_gain(double fraction) {
  double percent = fraction * 100.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.1f%%", percent);
  return buf;
}

std::vector<ComparisonRow> compare(std::span<const RichnessReport> reports,
                                   const std::string& baseline) {
  const RichnessReport* base = nullptr;
  for (const RichnessReport& r : reports) {
    if (r.name == baseline) {
      base = &r;
      break;
    }
  }
  if (base == nullptr) {
    throw ConfigError("baseline report '" + baseline + "' not found");
  }
  if (base->distinct == 0) {
    throw ConfigError("baseline report '" + baseline +
                      "' has no distinct triphones");
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(reports.size());
  for (const RichnessReport& r : reports) {
    ComparisonRow row;
    row.name = r.name;
    row.distinct = r.distinct;
    row.total = r.total;
    row.is_baseline = &r == base;
    row.gain = (double(r.distinct) - double(base->distinct)) /
               double(base->distinct);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void append_row(std::ostringstream& out, std::string_view name,
                std::string_view distinct, std::string_view total,
                std::string_view ratio, std::string_view extra = "") {
  char buf[160];
  if (extra.empty()) {
    std::snprintf(buf, sizeof buf, "%-18.18s %12.12s %12.12s %10.10s\n",
                  std::string(name).c_str(), std::string(distinct).c_str(),
                  std::string(total).c_str(), std::string(ratio).c_str());
  } else {
    std::snprintf(buf, sizeof buf, "%-18.18s %12.12s %12.12s %10.10s %12.12s\n",
                  std::string(name).c_str(), std::string(distinct).c_str(),
                  std::string(total).c_str(), std::string(ratio).c_str(),
                  std::string(extra).c_str());
  }
  out << buf;
}

}  // namespace

std::string render_comparison(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  append_row(out, "corpus", "distinct", "total", "ratio", "gain");
  for (const ComparisonRow& row : rows) {
    append_row(out, row.name, std::to_string(row.distinct),
               std::to_string(row.total),
               render_percent(row.distinct, row.total),
               row.is_baseline ? "(baseline)" : render_gain(row.gain));
  }
  return out.str();
}

std::string render_richness_table(std::span<const RichnessReport> reports) {
  std::ostringstream out;
  append_row(out, "corpus", "distinct", "total", "ratio");
  for (const RichnessReport& r : reports) {
    append_row(out, r.name, std::to_string(r.distinct),
               std::to_string(r.total), render_percent(r.distinct, r.total));
  }
  return out.str();
}

std::string render_category_table(const RichnessReport& report) {
  std::ostringstream out;
  append_row(out, "category", "distinct", "total", "ratio");
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    const CategoryRichness& counts = report.per_category[c];
    append_row(out, category_name(static_cast<TriphoneCategory>(c)),
               std::to_string(counts.distinct), std::to_string(counts.total),
               render_percent(counts.distinct, counts.total));
  }
  return out.str();
}

NewTriphoneSeries new_triphone_series(std::span<const TraceEntry> trace) {
  NewTriphoneSeries out;
  out.per_sentence.reserve(trace.size());
  out.cumulative_mean.reserve(trace.size());
  double sum = 0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    double value = trace[i].new_total;
    out.per_sentence.push_back(value);
    sum += value;
    out.cumulative_mean.push_back(sum / double(i + 1));
  }
  return out;
}

SaturationResult variance_changepoint(std::span<const double> series,
                                      double critical_value) {
  if (series.size() < 3) {
    throw std::invalid_argument(
        "variance_changepoint: series must have at least 3 points");
  }
  SaturationResult result;
  result.critical_value = critical_value;
  result.series_length = static_cast<std::uint32_t>(series.size());

  const std::size_t n = series.size();
  double total = 0;
  for (double x : series) total += x * x;
  if (total <= 0) return result;  // no variation, no changepoint

  // D_k over k in [1, n-1]; ties keep the first argmax.
  double running = 0;
  double best = -1;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= n - 1; ++k) {
    running += series[k - 1] * series[k - 1];
    double drift = running / total - double(k) / double(n);
    double mag = std::abs(drift);
    if (mag > best) {
      best = mag;
      best_k = k;
    }
  }
  result.statistic = best * std::sqrt(double(n) / 2.0);
  if (result.statistic > critical_value) {
    result.changepoint_index = static_cast<std::uint32_t>(best_k);
  }
  return result;
}

std::vector<double> cusum_drift(std::span<const double> series) {
  std::vector<double> out;
  if (series.size() < 2) return out;
  double total = 0;
  for (double x : series) total += x * x;
  if (total <= 0) return out;
  out.reserve(series.size() - 1);
  double running = 0;
  const std::size_t n = series.size();
  for (std::size_t k = 1; k <= n - 1; ++k) {
    running += series[k - 1] * series[k - 1];
    out.push_back(std::abs(running / total - double(k) / double(n)));
  }
  return out;
}

SaturationResult saturation_point(std::span<const TraceEntry> trace,
                                  double critical_value) {
  NewTriphoneSeries series = new_triphone_series(trace);
  return variance_changepoint(series.per_sentence, critical_value);
}

DurationEstimate estimate_duration(std::uint64_t token_count,
                                   SyllableBasis basis,
                                   std::span<const std::uint32_t>
                                       syllable_counts) {
  constexpr double kSyllablesPerSecond = 6.0;
  constexpr double kSyllablesPerWord = 4.0;
  DurationEstimate out;
  out.token_count = token_count;
  out.basis = basis;
  if (basis == SyllableBasis::kAverageFour) {
    out.seconds = double(token_count) * kSyllablesPerWord / kSyllablesPerSecond;
  } else {
    double syllables = 0;
    for (std::uint32_t c : syllable_counts) syllables += c;
    out.seconds = syllables / kSyllablesPerSecond;
  }
  out.hours = out.seconds / 3600.0;
  return out;
}

}  // namespace fonorico
