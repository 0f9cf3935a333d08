// tests/support/reference_select.cpp
#include "support/reference_select.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fonorico::testing {

namespace {

// Independent symbol classification, written out from the dialect
// tables rather than queried from the inventory module.
char klass(const std::string& symbol) {
  static const std::map<std::string, char> kClasses = {
      {"p", 'C'}, {"b", 'C'}, {"t", 'C'}, {"d", 'C'}, {"k", 'C'},
      {"g", 'C'}, {"tʃ", 'C'}, {"dʒ", 'C'}, {"m", 'C'}, {"n", 'C'},
      {"ɲ", 'C'}, {"ɾ", 'C'}, {"f", 'C'}, {"v", 'C'}, {"s", 'C'},
      {"z", 'C'}, {"ʃ", 'C'}, {"ʒ", 'C'}, {"ɣ", 'C'}, {"l", 'C'},
      {"ʎ", 'C'}, {"i", 'V'}, {"u", 'V'}, {"ɪ", 'V'}, {"ʊ", 'V'},
      {"e", 'V'}, {"o", 'V'}, {"ɛ", 'V'}, {"ɔ", 'V'}, {"ɐ", 'V'},
      {"a", 'V'}};
  auto it = kClasses.find(symbol);
  if (it == kClasses.end()) throw std::runtime_error("unknown symbol");
  return it->second;
}

int category_of(const std::array<std::string, 3>& t) {
  int idx = 0;
  for (const std::string& s : t) {
    idx = idx * 2 + (klass(s) == 'C' ? 1 : 0);
  }
  return idx;  // VVV=0 ... CCC=7
}

struct Contribution {
  std::array<std::uint32_t, 8> per_category{};
  double score = 0;
};

Contribution contribution_of(const RefSentence& s, const RefState& state,
                             const RefConfig& cfg) {
  std::set<std::array<std::string, 3>> fresh;
  for (std::size_t i = 0; i + 2 < s.symbols.size(); ++i) {
    std::array<std::string, 3> t = {s.symbols[i], s.symbols[i + 1],
                                    s.symbols[i + 2]};
    if (!state.seen.count(t)) fresh.insert(t);
  }
  Contribution out;
  for (const auto& t : fresh) ++out.per_category[category_of(t)];
  for (int c = 0; c < 8; ++c) out.score += cfg.weights[c] * out.per_category[c];
  return out;
}

template <typename T>
T quantile_sorted(std::vector<T> v, double p) {
  std::sort(v.begin(), v.end());
  std::size_t idx = std::size_t(p * double(v.size() - 1));
  return v[std::min(idx, v.size() - 1)];
}

}  // namespace

std::vector<std::string> reference_select_batch(
    const std::vector<RefSentence>& batch, RefState& state,
    const RefConfig& cfg) {
  std::vector<std::string> accepted;
  if (batch.empty()) return accepted;

  std::vector<Contribution> initial;
  initial.reserve(batch.size());
  for (const RefSentence& s : batch) {
    initial.push_back(contribution_of(s, state, cfg));
  }

  std::array<std::uint32_t, 8> cat_thresholds{};
  for (int c = 0; c < 8; ++c) {
    std::vector<std::uint32_t> col;
    col.reserve(batch.size());
    for (const Contribution& contribution : initial) {
      col.push_back(contribution.per_category[c]);
    }
    cat_thresholds[c] = quantile_sorted(col, cfg.threshold_percentile);
  }
  std::vector<double> scores;
  scores.reserve(batch.size());
  for (const Contribution& contribution : initial) {
    scores.push_back(contribution.score);
  }
  double score_threshold = quantile_sorted(scores, cfg.threshold_percentile);

  std::vector<std::size_t> order(batch.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (initial[a].score != initial[b].score)
      return initial[a].score > initial[b].score;
    return batch[a].id < batch[b].id;
  });

  for (std::size_t idx : order) {
    if (state.selected >= cfg.cap) break;
    const RefSentence& s = batch[idx];
    Contribution live = contribution_of(s, state, cfg);
    if (live.score <= 0) continue;
    if (live.score < score_threshold) continue;
    bool meets = true;
    for (int c = 0; c < 8; ++c) {
      if (live.per_category[c] < cat_thresholds[c]) {
        meets = false;
        break;
      }
    }
    if (!meets) continue;
    std::uint64_t type_cap =
        std::uint64_t(cfg.quotas[s.sentence_type] * cfg.cap);
    if (state.per_type[s.sentence_type] >= type_cap) continue;

    for (std::size_t i = 0; i + 2 < s.symbols.size(); ++i) {
      state.seen.insert({s.symbols[i], s.symbols[i + 1], s.symbols[i + 2]});
    }
    ++state.per_type[s.sentence_type];
    ++state.selected;
    accepted.push_back(s.id);
  }
  return accepted;
}

}  // namespace fonorico::testing
