#include "kleinian/words.hpp"

#include <cctype>
#include <cstdlib>

#include "kleinian/errors.hpp"

namespace kleinian {

Word parse_word(std::string_view text) {
  Word word;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::parse_error, "unexpected character in word: " + std::string(text));
    Letter letter{text[i], 1};
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string digits(text.substr(start, i - start));
      if (digits.empty() || digits == "-" || digits == "+")
        throw Error(ErrorCode::parse_error, "missing exponent in word: " + std::string(text));
      letter.exponent = std::atoi(digits.c_str());
    }
    word.push_back(letter);
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (const Letter& l : word) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

int word_length(const Word& word) {
  int n = 0;
  for (const Letter& l : word) n += std::abs(l.exponent);
  return n;
}

MoebiusMap evaluate(const Word& word, const Alphabet& alphabet, int renormalize_every) {
  MoebiusMap out;
  int products = 0;
  for (const Letter& l : word) {
    auto it = alphabet.find(l.generator);
    if (it == alphabet.end())
      throw Error(ErrorCode::parse_error, std::string("unknown generator '") + l.generator + "'");
    const MoebiusMap step = l.exponent < 0 ? it->second.inverse() : it->second;
    for (int k = 0; k < std::abs(l.exponent); ++k) {
      out = out * step;
      if (renormalize_every > 0 && ++products % renormalize_every == 0) out = out.renormalized();
    }
  }
  return out.renormalized();
}

}  // namespace kleinian
