#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dncox/exchange.hpp"
#include "dncox/ogs.hpp"
#include "dncox/subgroups.hpp"
#include "dncox/wordlang.hpp"

using namespace dncox;

TEST_CASE("basic parses") {
  MixedWord w = parse_word("s1' s2 t3^2 w1", 4);
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[0].kind == LetterKind::SPrime);
  CHECK(w.letters[1].kind == LetterKind::S);
  CHECK(w.letters[1].index == 2);
  CHECK(w.letters[2].kind == LetterKind::T);
  CHECK(w.letters[2].index == 3);
  CHECK(w.letters[2].exp == 2);
  CHECK(w.letters[3].kind == LetterKind::W);
}

TEST_CASE("separators: whitespace, star, none between terms") {
  CHECK(evaluate_word(parse_word("s1*s2", 4)) ==
        evaluate_word(parse_word("s1 s2", 4)));
  CHECK(evaluate_word(parse_word("s1's2", 4)) ==
        evaluate_word(parse_word("s1' s2", 4)));
  CHECK(evaluate_word(parse_word("t3^2w2", 4)) ==
        evaluate_word(parse_word("t3^2 w2", 4)));
}

TEST_CASE("s0 is an alias for s1'") {
  CHECK(evaluate_word(parse_word("s0", 4)) == s_prime_generator(4));
}

TEST_CASE("identity word") {
  CHECK(evaluate_word(parse_word("e", 4)).is_identity());
  CHECK(evaluate_word(parse_word("", 4)).is_identity());
  CHECK(evaluate_word(parse_word("   ", 4)).is_identity());
}

TEST_CASE("exponent reduction and zero exponents") {
  // t_k^k = identity
  CHECK(parse_word("t3^3", 4).letters.empty());
  CHECK(parse_word("s2^0", 4).letters.empty());
  CHECK(parse_word("w2^0", 4).letters.empty());
  CHECK_FALSE(parse_word("t3^4", 4).letters.empty());
}

TEST_CASE("range and syntax errors carry a column") {
  auto expect_error = [](const std::string& text, int n) {
    try {
      parse_word(text, n);
      FAIL("expected parse_error for: " << text);
    } catch (const parse_error& e) {
      CHECK(e.column() >= 1);
    }
  };
  expect_error("x3", 4);
  expect_error("s", 4);
  expect_error("s9", 4);
  expect_error("s4", 4);   // rank 4: s-index max 3
  expect_error("t1", 4);
  expect_error("t5", 4);
  expect_error("w0", 4);
  expect_error("w4", 4);   // rank 4: w-index max 3
  expect_error("t3^", 4);
  expect_error("s2'", 4);
  expect_error("t3'", 4);
  expect_error("s2^2", 4);
  expect_error("w2^2", 4);
  expect_error("s1 & s2", 4);
  expect_error("t3^99999999", 4);
}

TEST_CASE("parser never crashes on fuzz input") {
  std::mt19937 rng(7);
  const std::string charset = "stw0123456789'^* e[],-x";
  std::uniform_int_distribution<size_t> cdist(0, charset.size() - 1);
  std::uniform_int_distribution<int> ldist(0, 24);
  for (int trial = 0; trial < 1000000; ++trial) {
    std::string text;
    int len = ldist(rng);
    for (int i = 0; i < len; ++i) text.push_back(charset[cdist(rng)]);
    try {
      MixedWord w = parse_word(text, 5);
      evaluate_word(w);  // any accepted word must evaluate
    } catch (const parse_error&) {
      // rejected inputs must raise parse_error, nothing else
    }
  }
  SUCCEED("fuzz completed");
}

TEST_CASE("round trip: form -> string -> parse -> normalize, n<=5") {
  for (int n = 2; n <= 5; ++n) {
    for (const SignedPermutation& p : enumerate_dn(n)) {
      DnOgsForm form = extract_dn_ogs(p);
      std::string text = form_to_string(form);
      MixedWord w = parse_word(text, n);
      CHECK(normalize_mixed_word(w, nullptr) == form);
    }
  }
}

TEST_CASE("letter round trip via letter_to_string") {
  std::vector<MixedLetter> letters{MixedLetter::s(3), MixedLetter::s_prime(),
                                   MixedLetter::t(5, 2), MixedLetter::w(4)};
  for (const MixedLetter& l : letters) {
    MixedWord w = parse_word(letter_to_string(l), 6);
    REQUIRE(w.letters.size() == 1);
    CHECK(letter_permutation(w.letters[0], 6) == letter_permutation(l, 6));
  }
}
