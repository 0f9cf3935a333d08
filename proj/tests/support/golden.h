// tests/support/golden.h
//
// The eight reference sentences with their expected triphones and
// categories, shared by the unit tests and the acceptance suite.
#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace fonorico::testing {

struct GoldenSentence {
  std::string_view text;
  std::array<std::string_view, 3> triphone;
  std::string_view category;
  // Token range the triphone must fall in (inclusive), checking that
  // cross-word triphones really cross the word boundary.
  std::size_t first_token;
  std::size_t last_token;
};

inline constexpr std::array<GoldenSentence, 8> kGoldenSentences = {{
    {"Pesquisa é uma coisa que muda toda hora.",
     {"ɐ", "ɛ", "u"}, "VVV", 0, 2},
    {"Isso é muito extremo.",
     {"s", "t", "ɾ"}, "CCC", 3, 3},
    {"Bibliotecas foram inauguradas em território americano.",
     {"ɾ", "ɪ", "ʊ"}, "CVV", 4, 4},
    {"Atualmente, esse é o limite.",
     {"a", "t", "u"}, "VCV", 0, 0},
    {"Em Florianópolis, fez dois graus celsius no domingo.",
     {"i", "ɐ", "n"}, "VVC", 1, 1},
    {"Ele está exultante desde que virou presidente.",
     {"ʊ", "p", "ɾ"}, "VCC", 5, 6},
    {"No total, serão chamados vinte e seis mil candidatos.",
     {"n", "ʊ", "t"}, "CVC", 0, 1},
    {"A mãe de todas as reformas é a reforma política.",
     {"s", "ɣ", "e"}, "CCV", 4, 5},
}};

}  // namespace fonorico::testing
