#pragma once

/**
 * @file signed_permutation.hpp
 * @brief Signed permutations of {±1..±n} and evaluation of generator words.
 *
 * A signed permutation π is a bijection of {±1,..,±n} with π(−i) = −π(i);
 * only the images of the positive points are stored.  The even-signed
 * permutations (an even number of negative images) form the Coxeter group
 * D_n, generated by the adjacent transpositions s_1..s_{n−1} together with
 * s_{1'} : 1 ↦ −2, 2 ↦ −1.
 *
 * Multiplication is left-to-right throughout the library:
 * (a·b)(i) = b(a(i)).
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dncox {

/// Domain error: invalid ranks, indices or group-membership violations.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class SignedPermutation {
public:
  /// Identity on {±1..±n}.
  explicit SignedPermutation(int n) : img_(static_cast<size_t>(check_rank(n))) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  /// From a one-line image list: images[i-1] = π(i), i = 1..n.
  explicit SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    check_rank(static_cast<int>(img_.size()));
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      int a = std::abs(v);
      if (a < 1 || a > n() || seen[static_cast<size_t>(a - 1)])
        throw domain_error("invalid one-line image list");
      seen[static_cast<size_t>(a - 1)] = true;
    }
  }

  int n() const { return static_cast<int>(img_.size()); }

  /// π(i) for i in {±1..±n}; negative arguments via π(−i) = −π(i).
  int operator()(int i) const {
    if (i == 0 || std::abs(i) > n()) throw domain_error("point out of range");
    return i > 0 ? img_[static_cast<size_t>(i - 1)]
                 : -img_[static_cast<size_t>(-i - 1)];
  }

  const std::vector<int>& images() const { return img_; }

  bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
  bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
  bool operator<(const SignedPermutation& o) const { return img_ < o.img_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  /// `[-2,-1,-4,-3]` rendering; the CLI/fixture interchange format.
  std::string to_string() const {
    std::string s = "[";
    for (int i = 1; i <= n(); ++i) {
      if (i > 1) s += ',';
      s += std::to_string((*this)(i));
    }
    return s + "]";
  }

  /// Compact integer key, usable as a hash-map key for ranks n ≤ 12.
  uint64_t key() const {
    uint64_t k = 0;
    for (int i = 1; i <= n(); ++i) {
      int v = (*this)(i);
      k = k * static_cast<uint64_t>(2 * n()) +
          static_cast<uint64_t>(v > 0 ? v - 1 : n() - 1 - v);
    }
    return k;
  }

private:
  static int check_rank(int n) {
    if (n < 2) throw domain_error("rank must be >= 2");
    return n;
  }
  std::vector<int> img_;
};

/// Left-to-right product: result(i) = b(a(i)).
inline SignedPermutation compose(const SignedPermutation& a,
                                 const SignedPermutation& b) {
  if (a.n() != b.n()) throw domain_error("rank mismatch in compose");
  std::vector<int> img(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) img[static_cast<size_t>(i - 1)] = b(a(i));
  return SignedPermutation(std::move(img));
}

inline SignedPermutation inverse(const SignedPermutation& a) {
  std::vector<int> img(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    int v = a(i);
    img[static_cast<size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(img));
}

/// Unsigned projection π′(i) = |π(i)|; a group homomorphism onto S_n.
inline SignedPermutation phi(const SignedPermutation& a) {
  std::vector<int> img(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i)
    img[static_cast<size_t>(i - 1)] = std::abs(a(i));
  return SignedPermutation(std::move(img));
}

/// Even number of negative images <=> membership in D_n.
inline bool is_d_element(const SignedPermutation& a) {
  int neg = 0;
  for (int i = 1; i <= a.n(); ++i)
    if (a(i) < 0) ++neg;
  return neg % 2 == 0;
}

inline bool all_positive(const SignedPermutation& a) {
  for (int i = 1; i <= a.n(); ++i)
    if (a(i) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generator permutations.
// ---------------------------------------------------------------------------

/// s_i: swaps the values i and i+1 (and −i, −(i+1)).
inline SignedPermutation s_generator(int i, int n) {
  if (i < 1 || i >= n) throw domain_error("s-index out of range");
  SignedPermutation id(n);
  std::vector<int> img = id.images();
  std::swap(img[static_cast<size_t>(i - 1)], img[static_cast<size_t>(i)]);
  return SignedPermutation(std::move(img));
}

/// s_{1'}: 1 ↦ −2, 2 ↦ −1, everything else fixed.
inline SignedPermutation s_prime_generator(int n) {
  SignedPermutation id(n);
  std::vector<int> img = id.images();
  img[0] = -2;
  img[1] = -1;
  return SignedPermutation(std::move(img));
}

/// t_m = s_1·s_2···s_{m−1}; one-line [m,1,2,...,m−1,m+1,...,n], order m.
inline SignedPermutation t_generator(int m, int n) {
  if (m < 2 || m > n) throw domain_error("t-index out of range");
  std::vector<int> img(static_cast<size_t>(n));
  img[0] = m;
  for (int j = 2; j <= m; ++j) img[static_cast<size_t>(j - 1)] = j - 1;
  for (int j = m + 1; j <= n; ++j) img[static_cast<size_t>(j - 1)] = j;
  return SignedPermutation(std::move(img));
}

/// w_L = s_L···s_1·s_{1'}·s_2···s_L; negates positions 1 and L+1; involution.
inline SignedPermutation w_generator(int L, int n) {
  if (L < 1 || L >= n) throw domain_error("w-index out of range");
  SignedPermutation id(n);
  std::vector<int> img = id.images();
  img[0] = -1;
  img[static_cast<size_t>(L)] = -(L + 1);
  return SignedPermutation(std::move(img));
}

// ---------------------------------------------------------------------------
// Words over the mixed generator alphabet {s_i, s_{1'}, t_k^e, w_L}.
// ---------------------------------------------------------------------------

enum class LetterKind : uint8_t { S, SPrime, T, W };

struct MixedLetter {
  LetterKind kind;
  int index = 0;  ///< s_i / t_k / w_L index; unused for SPrime
  int exp = 1;    ///< exponent; only meaningful for T (reduced mod k lazily)

  static MixedLetter s(int i) { return {LetterKind::S, i, 1}; }
  static MixedLetter s_prime() { return {LetterKind::SPrime, 0, 1}; }
  static MixedLetter t(int k, int e = 1) { return {LetterKind::T, k, e}; }
  static MixedLetter w(int L) { return {LetterKind::W, L, 1}; }

  bool operator==(const MixedLetter& o) const {
    return kind == o.kind && index == o.index && exp == o.exp;
  }
};

struct MixedWord {
  int n;
  std::vector<MixedLetter> letters;
};

inline SignedPermutation letter_permutation(const MixedLetter& l, int n) {
  switch (l.kind) {
    case LetterKind::S: return s_generator(l.index, n);
    case LetterKind::SPrime: return s_prime_generator(n);
    case LetterKind::W: return w_generator(l.index, n);
    case LetterKind::T: {
      // t_k has order k; reduce the exponent before powering.
      int e = l.exp % l.index;
      if (e < 0) e += l.index;
      SignedPermutation acc(n);
      SignedPermutation t = t_generator(l.index, n);
      for (int r = 0; r < e; ++r) acc = compose(acc, t);
      return acc;
    }
  }
  throw domain_error("unreachable letter kind");
}

/// Left-to-right product of the letter permutations.
inline SignedPermutation evaluate_word(const MixedWord& word) {
  SignedPermutation acc(word.n);
  for (const MixedLetter& l : word.letters)
    acc = compose(acc, letter_permutation(l, word.n));
  return acc;
}

/// Render a letter in the CLI word grammar (`s3`, `s1'`, `t5^2`, `w4`).
inline std::string letter_to_string(const MixedLetter& l) {
  switch (l.kind) {
    case LetterKind::S: return "s" + std::to_string(l.index);
    case LetterKind::SPrime: return "s1'";
    case LetterKind::W: return "w" + std::to_string(l.index);
    case LetterKind::T:
      return l.exp == 1 ? "t" + std::to_string(l.index)
                        : "t" + std::to_string(l.index) + "^" +
                              std::to_string(l.exp);
  }
  return "?";
}

inline std::string word_to_string(const MixedWord& w) {
  if (w.letters.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '*';
    s += letter_to_string(w.letters[i]);
  }
  return s;
}

/// Parse the `[-2,-1,-4,-3]` one-line notation.
inline SignedPermutation parse_permutation(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[')
    throw domain_error("permutation literal must start with '['");
  ++pos;
  std::vector<int> img;
  for (;;) {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw domain_error("expected integer in permutation literal");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    img.push_back(neg ? -v : v);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != ']')
    throw domain_error("permutation literal must end with ']'");
  ++pos;
  skip_ws();
  if (pos != text.size()) throw domain_error("trailing characters after ']'");
  return SignedPermutation(std::move(img));
}

}  // namespace dncox
