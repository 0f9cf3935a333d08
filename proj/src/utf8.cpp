// src/utf8.cpp
#include "fonorico/utf8.h"

namespace fonorico::utf8 {

namespace {

constexpr char32_t kReplacement = 0xfffd;

// Precomposed targets for base + combining mark, Portuguese alphabet.
char32_t composed(char32_t base, char32_t mark) {
  struct Entry {
    char32_t base, mark, result;
  };
  static constexpr Entry kTable[] = {
      {U'a', 0x0300, U'à'}, {U'a', 0x0301, U'á'}, {U'a', 0x0302, U'â'},
      {U'a', 0x0303, U'ã'}, {U'e', 0x0301, U'é'}, {U'e', 0x0302, U'ê'},
      {U'i', 0x0301, U'í'}, {U'o', 0x0301, U'ó'}, {U'o', 0x0302, U'ô'},
      {U'o', 0x0303, U'õ'}, {U'u', 0x0301, U'ú'}, {U'u', 0x0308, U'ü'},
      {U'c', 0x0327, U'ç'}, {U'A', 0x0300, U'À'}, {U'A', 0x0301, U'Á'},
      {U'A', 0x0302, U'Â'}, {U'A', 0x0303, U'Ã'}, {U'E', 0x0301, U'É'},
      {U'E', 0x0302, U'Ê'}, {U'I', 0x0301, U'Í'}, {U'O', 0x0301, U'Ó'},
      {U'O', 0x0302, U'Ô'}, {U'O', 0x0303, U'Õ'}, {U'U', 0x0301, U'Ú'},
      {U'U', 0x0308, U'Ü'}, {U'C', 0x0327, U'Ç'},
  };
  for (const auto& e : kTable) {
    if (e.base == base && e.mark == mark) return e.result;
  }
  return 0;
}

}  // namespace

char32_t decode(std::string_view s, std::size_t& i) {
  unsigned char b0 = s[i];
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xc0) ==
                                   0x80;
  };
  if ((b0 & 0xe0) == 0xc0 && cont(1)) {
    char32_t cp = (char32_t(b0 & 0x1f) << 6) |
                  (static_cast<unsigned char>(s[i + 1]) & 0x3f);
    i += 2;
    return cp >= 0x80 ? cp : kReplacement;
  }
  if ((b0 & 0xf0) == 0xe0 && cont(1) && cont(2)) {
    char32_t cp = (char32_t(b0 & 0x0f) << 12) |
                  (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3f) << 6) |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3f);
    i += 3;
    return cp >= 0x800 ? cp : kReplacement;
  }
  if ((b0 & 0xf8) == 0xf0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp =
        (char32_t(b0 & 0x07) << 18) |
        (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3f) << 12) |
        (char32_t(static_cast<unsigned char>(s[i + 2]) & 0x3f) << 6) |
        (static_cast<unsigned char>(s[i + 3]) & 0x3f);
    i += 4;
    return (cp >= 0x10000 && cp <= 0x10ffff) ? cp : kReplacement;
  }
  ++i;
  return kReplacement;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

std::vector<char32_t> decode_all(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode(s, i));
  return out;
}

std::string encode_all(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) encode(cp, out);
  return out;
}

std::string compose(std::string_view s) {
  std::vector<char32_t> cps = decode_all(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty()) {
      if (char32_t c = composed(out.back(), cp); c != 0) {
        out.back() = c;
        continue;
      }
    }
    out.push_back(cp);
  }
  return encode_all(out);
}

std::string fold_case(std::string_view s) {
  std::vector<char32_t> cps = decode_all(s);
  for (char32_t& cp : cps) {
    if (cp >= U'A' && cp <= U'Z') {
      cp += 0x20;
    } else if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) {
      cp += 0x20;  // Latin-1 accented capitals, skipping the times sign
    }
  }
  return encode_all(cps);
}

bool is_uppercase_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= 0xc0 && cp <= 0xde && cp != 0xd7);
}

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  // Latin-1 letters (excludes the multiplication/division signs).
  if (cp >= 0xc0 && cp <= 0xff && cp != 0xd7 && cp != 0xf7) return true;
  // Latin Extended-A covers the rest of the orthographies we meet.
  return cp >= 0x100 && cp <= 0x17f;
}

std::size_t length(std::string_view s) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    decode(s, i);
    ++n;
  }
  return n;
}

}  // namespace fonorico::utf8
