// include/fonorico/utf8.h
//
// Minimal UTF-8 handling for Portuguese orthography and IPA symbols:
// decoding, case folding, and composition of the combining sequences
// that occur in practice. Not a general Unicode library.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fonorico::utf8 {

// Decodes one code point starting at s[i]; advances i past it.
// Invalid bytes decode as U+FFFD and advance one byte.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

std::vector<char32_t> decode_all(std::string_view s);

std::string encode_all(const std::vector<char32_t>& cps);

// Composes base letter + combining mark pairs (the Portuguese set:
// acute, grave, circumflex, tilde, diaeresis, cedilla) into their
// precomposed forms so that visually identical strings compare equal.
std::string compose(std::string_view s);

// Lowercases ASCII and Latin-1 uppercase letters (covers the full
// Portuguese alphabet including accented capitals).
std::string fold_case(std::string_view s);

bool is_uppercase_letter(char32_t cp);

bool is_letter(char32_t cp);

// Code point count, not bytes.
std::size_t length(std::string_view s);

}  // namespace fonorico::utf8
