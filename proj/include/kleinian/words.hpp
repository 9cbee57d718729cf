#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian/moebius.hpp"

namespace kleinian {

struct Letter {
  char generator = 'f';
  int exponent = 1;
};

using Word = std::vector<Letter>;
using Alphabet = std::map<char, MoebiusMap>;

// Parses "f^3 g f g^-1 ..."; whitespace separates letters, '^' introduces an exponent.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);
int word_length(const Word& word);

MoebiusMap evaluate(const Word& word, const Alphabet& alphabet, int renormalize_every = 8);

}  // namespace kleinian
