// src/g2p.cpp
#include "fonorico/g2p.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fonorico/utf8.h"
#include "fonorico/util.h"
#include "g2p_default_rules.h"

namespace fonorico {

namespace {

// Orthographic vowel letters for the V/C context classes.
bool is_ortho_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'à': case U'â': case U'ã':
    case U'é': case U'ê': case U'í':
    case U'ó': case U'ô': case U'õ':
    case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

bool atom_matches(char32_t atom, char32_t text_cp) {
  if (atom == U'V') return is_ortho_vowel(text_cp);
  if (atom == U'C') return utf8::is_letter(text_cp) && !is_ortho_vowel(text_cp);
  return atom == text_cp;
}

// Left context is written in reading order and anchored at `pos`:
// its last atom must match text[pos-1], and so on. '#' is the word
// start and only meaningful as the first atom.
bool left_matches(const std::u32string& ctx,
                  const std::vector<char32_t>& text, std::size_t pos) {
  std::size_t need = ctx.size();
  for (std::size_t k = 0; k < need; ++k) {
    char32_t atom = ctx[need - 1 - k];
    if (atom == U'#') return pos == k;
    if (pos < k + 1) return false;
    if (!atom_matches(atom, text[pos - 1 - k])) return false;
  }
  return true;
}

// Right context anchored at `pos` (first position after the pattern);
// '#' is the word end.
bool right_matches(const std::u32string& ctx,
                   const std::vector<char32_t>& text, std::size_t pos) {
  std::size_t p = pos;
  for (char32_t atom : ctx) {
    if (atom == U'#') return p == text.size();
    if (p >= text.size()) return false;
    if (!atom_matches(atom, text[p])) return false;
    ++p;
  }
  return true;
}

std::u32string to_u32(std::string_view s) {
  auto cps = utf8::decode_all(s);
  return std::u32string(cps.begin(), cps.end());
}

}  // namespace

Ruleset Ruleset::parse(std::istream& in, const PhonemeInventory& inv) {
  Ruleset rs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.starts_with("@version")) {
      rs.version_ = std::string(trim(body.substr(8)));
      continue;
    }
    auto cols = split(body, '\t');
    if (cols.size() != 5) {
      throw ConfigError("ruleset line " + std::to_string(line_no) +
                        ": expected 5 tab-separated columns, got " +
                        std::to_string(cols.size()));
    }
    TranscriptionRule rule;
    rule.pattern = to_u32(utf8::compose(trim(cols[0])));
    if (rule.pattern.empty()) {
      throw ConfigError("ruleset line " + std::to_string(line_no) +
                        ": empty pattern");
    }
    auto context = [&](std::string_view field) -> std::u32string {
      std::string_view t = trim(field);
      return t == "_" ? std::u32string{} : to_u32(utf8::compose(t));
    };
    rule.left_context = context(cols[1]);
    rule.right_context = context(cols[2]);
    std::string_view out = trim(cols[3]);
    if (out != "_") {
      for (std::string_view sym : split(out, ' ')) {
        if (sym.empty()) continue;
        rule.output.push_back(inv.id_of(
            utf8::compose(sym), "in ruleset line " + std::to_string(line_no)));
      }
    }
    try {
      rule.priority = std::stoi(std::string(trim(cols[4])));
    } catch (const std::exception&) {
      throw ConfigError("ruleset line " + std::to_string(line_no) +
                        ": bad priority '" + std::string(trim(cols[4])) + "'");
    }
    rs.rules_.push_back(std::move(rule));
  }
  if (rs.version_.empty()) {
    throw ConfigError("ruleset has no @version directive");
  }
  for (std::uint32_t i = 0; i < rs.rules_.size(); ++i) {
    rs.buckets_[rs.rules_[i].pattern[0]].push_back(i);
  }
  for (auto& [cp, bucket] : rs.buckets_) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       const auto& ra = rs.rules_[a];
                       const auto& rb = rs.rules_[b];
                       if (ra.pattern.size() != rb.pattern.size())
                         return ra.pattern.size() > rb.pattern.size();
                       return ra.priority > rb.priority;
                     });
  }
  return rs;
}

Ruleset Ruleset::parse_string(std::string_view text,
                              const PhonemeInventory& inv) {
  std::istringstream in{std::string(text)};
  return parse(in, inv);
}

Ruleset Ruleset::load_file(const std::string& path,
                           const PhonemeInventory& inv) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ruleset file: " + path);
  return parse(in, inv);
}

std::shared_ptr<const Ruleset> Ruleset::builtin() {
  static const std::shared_ptr<const Ruleset> rs =
      std::make_shared<const Ruleset>(
          parse_string(detail::kDefaultG2pRules, default_inventory()));
  return rs;
}

Ruleset Ruleset::builtin_for(const PhonemeInventory& inv) {
  return parse_string(detail::kDefaultG2pRules, inv);
}

const std::vector<std::uint32_t>* Ruleset::bucket(char32_t first) const {
  auto it = buckets_.find(first);
  return it == buckets_.end() ? nullptr : &it->second;
}

Transcriber::Transcriber(std::shared_ptr<const Ruleset> rules,
                         const PhonemeInventory& inv)
    : rules_(std::move(rules)), inv_(&inv) {}

const std::vector<PhonemeId>* Transcriber::lookup(
    std::string_view token) const {
  std::string folded = utf8::fold_case(utf8::compose(token));
  auto it = cache_.find(folded);
  if (it == cache_.end()) {
    // Zipfian token streams keep this small in practice; the cap
    // bounds memory on adversarial input.
    if (cache_.size() >= (1u << 20)) cache_.clear();
    CacheEntry entry;
    entry.ok = true;
    std::vector<char32_t> text = utf8::decode_all(folded);
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::vector<std::uint32_t>* bucket = rules_->bucket(text[pos]);
      const TranscriptionRule* chosen = nullptr;
      if (bucket != nullptr) {
        for (std::uint32_t idx : *bucket) {
          const TranscriptionRule& r = rules_->rule(idx);
          if (pos + r.pattern.size() > text.size()) continue;
          if (!std::equal(r.pattern.begin(), r.pattern.end(),
                          text.begin() + pos))
            continue;
          if (!left_matches(r.left_context, text, pos)) continue;
          if (!right_matches(r.right_context, text, pos + r.pattern.size()))
            continue;
          chosen = &r;
          break;
        }
      }
      if (chosen == nullptr) {
        entry.ok = false;
        entry.phonemes.clear();
        break;
      }
      entry.phonemes.insert(entry.phonemes.end(), chosen->output.begin(),
                            chosen->output.end());
      pos += chosen->pattern.size();
    }
    it = cache_.emplace(std::move(folded), std::move(entry)).first;
  }
  return it->second.ok ? &it->second.phonemes : nullptr;
}

Transcription Transcriber::transcribe(
    std::span<const std::string> tokens) const {
  Transcription out;
  out.token_spans.reserve(tokens.size());
  for (const std::string& token : tokens) {
    const std::vector<PhonemeId>* phonemes = lookup(token);
    std::uint32_t begin = static_cast<std::uint32_t>(out.phonemes.size());
    if (phonemes == nullptr) {
      out.failed_tokens.push_back(token);
      out.token_spans.emplace_back(begin, begin);
      continue;
    }
    out.phonemes.insert(out.phonemes.end(), phonemes->begin(),
                        phonemes->end());
    out.token_spans.emplace_back(
        begin, static_cast<std::uint32_t>(out.phonemes.size()));
  }
  out.syllable_count = count_syllables(out.phonemes, *inv_);
  return out;
}

bool Transcriber::can_transcribe(std::string_view token) const {
  return lookup(token) != nullptr;
}

std::uint32_t count_syllables(std::span<const PhonemeId> phonemes,
                              const PhonemeInventory& inv) {
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (!inv.is_vocoid(phonemes[i])) continue;
    if (i > 0 && inv.is_vocoid(phonemes[i - 1])) {
      // Second element of a falling diphthong: the near-close vocoids
      // act as offglides and share the preceding nucleus.
      const auto& p = inv.phoneme(phonemes[i]);
      const auto* v = std::get_if<VocoidFeatures>(&p.features);
      if (v != nullptr && v->height == Height::kNearClose) continue;
    }
    ++count;
  }
  return count;
}

}  // namespace fonorico
