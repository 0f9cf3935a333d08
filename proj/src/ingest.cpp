// src/ingest.cpp
#include "fonorico/ingest.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "fonorico/utf8.h"
#include "fonorico/util.h"

namespace fonorico {

namespace {

bool is_terminal(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == U'…';
}

bool is_closing(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case U'»': case U'”': case U'’': case U'›':
      return true;
    default:
      return false;
  }
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Words whose trailing period does not end a sentence. Case-folded.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> abbrevs = {
      "dr",  "dra",  "sr",   "sra", "srta", "prof", "profa", "eng",
      "exmo", "exma", "av",   "etc", "ex",   "pág",  "tel",   "cia",
      "ltda", "jr",   "sto",  "sta", "obs",  "fig",  "cap",   "art",
  };
  return abbrevs;
}

// The word immediately before position `i` (letters only), folded.
std::string word_before(const std::vector<char32_t>& text, std::size_t i) {
  std::size_t end = i;
  std::size_t begin = end;
  while (begin > 0 && utf8::is_letter(text[begin - 1])) --begin;
  if (begin == end) return "";
  std::string out;
  for (std::size_t k = begin; k < end; ++k) utf8::encode(text[k], out);
  return utf8::fold_case(out);
}

}  // namespace

std::optional<CalendarDate> CalendarDate::parse(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  auto parse_int = [](std::string_view part, int& out) {
    auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc() && ptr == part.data() + part.size();
  };
  auto parts = split(s, '-');
  CalendarDate d;
  if (parts.size() == 1) {
    if (!parse_int(parts[0], d.year) || parts[0].size() != 4)
      return std::nullopt;
    return d;
  }
  if (parts.size() != 3) return std::nullopt;
  if (!parse_int(parts[0], d.year) || !parse_int(parts[1], d.month) ||
      !parse_int(parts[2], d.day))
    return std::nullopt;
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
    return std::nullopt;
  return d;
}

std::string CalendarDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string_view to_string(SentenceType t) {
  switch (t) {
    case SentenceType::kInterrogative: return "interrogative";
    case SentenceType::kExclamative: return "exclamative";
    default: return "declarative";
  }
}

SentenceType sentence_type_from_string(std::string_view s) {
  if (s == "interrogative") return SentenceType::kInterrogative;
  if (s == "exclamative") return SentenceType::kExclamative;
  if (s == "declarative") return SentenceType::kDeclarative;
  throw ConfigError("unknown sentence type '" + std::string(s) + "'");
}

std::string clean(std::string_view text) {
  std::vector<char32_t> cps = utf8::decode_all(utf8::compose(text));
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    // Markup: '<' immediately followed by a letter, '/' or '!' opens a
    // tag that runs to the next '>'.
    if (cp == U'<' && i + 1 < cps.size() &&
        (utf8::is_letter(cps[i + 1]) || cps[i + 1] == U'/' ||
         cps[i + 1] == U'!')) {
      std::size_t close = i + 1;
      while (close < cps.size() && cps[close] != U'>') ++close;
      if (close < cps.size()) {
        i = close + 1;
        pending_space = !out.empty();
        continue;
      }
    }
    bool is_space = cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
                    cp == 0x0b || cp == 0x0c || cp == 0xa0;
    bool is_control = cp < 0x20 || cp == 0x7f;
    if (is_space || is_control) {
      pending_space = !out.empty();
      ++i;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::encode(cp, out);
    ++i;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> cps = utf8::decode_all(text);
  std::size_t i = 0;
  auto is_space = [](char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r';
  };
  auto is_word_cp = [](char32_t cp) {
    return utf8::is_letter(cp) || is_digit(cp);
  };
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) ++i;
    std::size_t begin = i;
    while (i < cps.size() && !is_space(cps[i])) ++i;
    if (begin == i) break;
    // Detach punctuation from the chunk edges; internal hyphens and
    // apostrophes stay, keeping clitics like "virou-se" one token.
    std::size_t b = begin;
    std::size_t e = i;
    while (b < e && !is_word_cp(cps[b])) ++b;
    while (e > b && !is_word_cp(cps[e - 1])) --e;
    if (b == e) continue;
    std::string token;
    for (std::size_t k = b; k < e; ++k) utf8::encode(cps[k], token);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

SentenceType classify_sentence_type(std::string_view text) {
  std::vector<char32_t> cps = utf8::decode_all(text);
  bool saw_question = false;
  bool saw_exclamation = false;
  for (auto it = cps.rbegin(); it != cps.rend(); ++it) {
    char32_t cp = *it;
    if (cp == U' ' || is_closing(cp)) continue;
    if (cp == U'?') {
      saw_question = true;
    } else if (cp == U'!') {
      saw_exclamation = true;
    } else if (cp == U'.' || cp == U'…') {
      // part of the terminal cluster; keep scanning
    } else {
      break;
    }
  }
  if (saw_question) return SentenceType::kInterrogative;
  if (saw_exclamation) return SentenceType::kExclamative;
  return SentenceType::kDeclarative;
}

std::string make_sentence_id(std::string_view source, std::uint64_t offset,
                             std::string_view text) {
  std::uint64_t h = fnv1a(source);
  h = fnv1a(std::string_view("\0", 1), h);
  h = fnv1a(std::to_string(offset), h);
  h = fnv1a(std::string_view("\0", 1), h);
  h = fnv1a(text, h);
  return to_hex(h);
}

std::vector<SentenceRecord> segment(const RawDocument& doc) {
  std::vector<SentenceRecord> records;
  std::vector<char32_t> cps = utf8::decode_all(doc.text);

  std::size_t start = 0;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && cps[begin] == U' ') ++begin;
    while (end > begin && cps[end - 1] == U' ') --end;
    if (begin >= end) return;
    std::string text;
    for (std::size_t k = begin; k < end; ++k) utf8::encode(cps[k], text);
    SentenceRecord rec;
    rec.text = std::move(text);
    rec.tokens = tokenize(rec.text);
    if (rec.tokens.empty()) return;
    rec.sentence_type = classify_sentence_type(rec.text);
    rec.source = doc.source;
    rec.id = make_sentence_id(doc.source, doc.offset + begin, rec.text);
    records.push_back(std::move(rec));
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!is_terminal(cps[i])) continue;
    if (cps[i] == U'.') {
      // Decimal and thousands separators.
      if (i > 0 && i + 1 < cps.size() && is_digit(cps[i - 1]) &&
          is_digit(cps[i + 1]))
        continue;
      std::string prev = word_before(cps, i);
      if (!prev.empty() &&
          (prev.size() <= 1 || abbreviations().contains(prev)))
        continue;
    }
    // Consume the whole terminal cluster plus trailing closers.
    std::size_t end = i + 1;
    while (end < cps.size() && (is_terminal(cps[end]) || is_closing(cps[end])))
      ++end;
    emit(start, end);
    start = end;
    i = end - 1;
  }
  emit(start, cps.size());  // unsplittable tail is a single record
  return records;
}

std::unordered_set<std::string> load_blocklist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open blocklist file: " + path);
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    out.insert(utf8::fold_case(utf8::compose(body)));
  }
  return out;
}

ExclusionFilter::ExclusionFilter(ExclusionCriteria criteria,
                                 TokenPredicate can_transcribe)
    : criteria_(std::move(criteria)),
      can_transcribe_(std::move(can_transcribe)) {}

bool ExclusionFilter::corpus_admissible(std::uint64_t corpus_token_count) {
  if (corpus_token_count < criteria_.min_corpus_tokens) {
    ++drops_.corpus_too_small;
    return false;
  }
  return true;
}

bool ExclusionFilter::document_admissible(const RawDocument& doc) {
  if (!doc.date.has_value()) return true;  // missing metadata passes
  if (*doc.date < criteria_.date_start || *doc.date > criteria_.date_end) {
    ++drops_.date_out_of_range;
    return false;
  }
  return true;
}

bool ExclusionFilter::record_admissible(const SentenceRecord& rec) {
  if (rec.tokens.empty()) {
    ++drops_.empty;
    return false;
  }
  if (!criteria_.blocklist.empty()) {
    for (const std::string& token : rec.tokens) {
      if (criteria_.blocklist.contains(utf8::fold_case(token))) {
        ++drops_.blocklisted;
        return false;
      }
    }
  }
  if (can_transcribe_) {
    std::size_t failed = 0;
    for (const std::string& token : rec.tokens) {
      if (!can_transcribe_(token)) ++failed;
    }
    double ratio = double(failed) / double(rec.tokens.size());
    if (ratio > criteria_.max_nonstandard_ratio) {
      ++drops_.nonstandard;
      return false;
    }
  }
  ++drops_.kept;
  return true;
}

std::vector<SentenceRecord> apply_exclusions(
    const std::vector<SentenceRecord>& records,
    const ExclusionCriteria& criteria, std::uint64_t corpus_token_count,
    ExclusionFilter::TokenPredicate can_transcribe, DropCounts* drops) {
  ExclusionFilter filter(criteria, std::move(can_transcribe));
  std::vector<SentenceRecord> out;
  if (filter.corpus_admissible(corpus_token_count)) {
    for (const SentenceRecord& rec : records) {
      if (filter.record_admissible(rec)) out.push_back(rec);
    }
  }
  if (drops != nullptr) *drops = filter.drops();
  return out;
}

void read_plaintext_documents(
    const std::string& path, const std::string& source,
    const std::function<void(RawDocument&&)>& on_document) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::string line;
  std::string buffer;
  std::uint64_t offset = 0;
  std::uint64_t doc_start = 0;
  auto flush = [&]() {
    if (trim(buffer).empty()) {
      buffer.clear();
      return;
    }
    RawDocument doc;
    doc.text = buffer;
    doc.source = source;
    doc.offset = doc_start;
    buffer.clear();
    on_document(std::move(doc));
  };
  while (std::getline(in, line)) {
    std::uint64_t line_start = offset;
    offset += line.size() + 1;
    if (trim(line).empty()) {
      flush();
      doc_start = offset;
      continue;
    }
    if (buffer.empty()) doc_start = line_start;
    buffer += line;
    buffer += '\n';
  }
  flush();
}

}  // namespace fonorico
