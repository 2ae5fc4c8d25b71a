#pragma once

/**
 * @file wordlang.hpp
 * @brief Parser for the generator-word expression language.
 *
 * Grammar:  word  := term (('*' | whitespace) term)*
 *           term  := 's' index | "s1'" | 's0' | 't' index ('^' nat)?
 *                  | 'w' index ('^' (0|1))?
 * `s1'` (alias `s0`) is the extra Coxeter generator; whitespace and '*'
 * both concatenate; '^' binds tighter than concatenation.  The rank is
 * always explicit — indices are validated against it, never inferred.
 */

#include <cctype>
#include <stdexcept>
#include <string>

#include "dncox/signed_permutation.hpp"

namespace dncox {

/// Syntax error with the 1-based input column where it was detected.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  size_t column() const { return column_; }

private:
  size_t column_;
};

/// Parse a word over {s_i, s_{1'}, t_k^e, w_L} at explicit rank n.
inline MixedWord parse_word(const std::string& text, int n) {
  if (n < 2) throw domain_error("rank must be >= 2");
  MixedWord word{n, {}};
  size_t pos = 0;
  auto col = [&] { return pos + 1; };
  auto skip_sep = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '*'))
      ++pos;
  };
  auto read_nat = [&](const char* what) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error(std::string("expected ") + what, col());
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw parse_error("number too large", col());
      ++pos;
    }
    return static_cast<int>(v);
  };
  skip_sep();
  if (pos < text.size() && text[pos] == 'e' &&
      (pos + 1 == text.size() || text[pos + 1] == '*' ||
       std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
    ++pos;  // explicit identity
    skip_sep();
  }
  while (pos < text.size()) {
    char c = text[pos];
    if (c != 's' && c != 't' && c != 'w')
      throw parse_error("expected generator letter s/t/w", col());
    ++pos;
    int index = read_nat("generator index");
    bool prime = false;
    if (pos < text.size() && text[pos] == '\'') {
      prime = true;
      ++pos;
    }
    int exp = 1;
    bool has_exp = false;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_nat("exponent");
      has_exp = true;
    }
    size_t term_col = col();
    if (c == 's') {
      if (prime && index != 1)
        throw parse_error("apostrophe only valid on s1", term_col);
      if (has_exp && exp > 1)
        throw parse_error("exponent on s letters must be 0 or 1", term_col);
      MixedLetter l = MixedLetter::s(0);
      if (prime || index == 0) {
        l = MixedLetter::s_prime();
      } else {
        if (index < 1 || index >= n)
          throw parse_error("s-index must be in 1..n-1", term_col);
        l = MixedLetter::s(index);
      }
      if (exp != 0) word.letters.push_back(l);
    } else if (c == 't') {
      if (prime) throw parse_error("apostrophe only valid on s1", term_col);
      if (index < 2 || index > n)
        throw parse_error("t-index must be in 2..n", term_col);
      if (exp % index != 0) word.letters.push_back(MixedLetter::t(index, exp));
    } else {
      if (prime) throw parse_error("apostrophe only valid on s1", term_col);
      if (has_exp && exp > 1)
        throw parse_error("exponent on w letters must be 0 or 1", term_col);
      if (index < 1 || index >= n)
        throw parse_error("w-index must be in 1..n-1", term_col);
      if (exp != 0) word.letters.push_back(MixedLetter::w(index));
    }
    size_t before = pos;
    skip_sep();
    if (pos == before && pos < text.size()) {
      // No separator: allow back-to-back terms only if the next char starts
      // one (e.g. "s1's2"); anything else is a syntax error.
      char nx = text[pos];
      if (nx != 's' && nx != 't' && nx != 'w')
        throw parse_error("unexpected character", col());
    }
  }
  return word;
}

}  // namespace dncox
