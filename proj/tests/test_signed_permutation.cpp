#include <catch2/catch_amalgamated.hpp>

#include "dncox/signed_permutation.hpp"

using namespace dncox;

TEST_CASE("identity and image access") {
  SignedPermutation id(4);
  CHECK(id.is_identity());
  for (int i = 1; i <= 4; ++i) {
    CHECK(id(i) == i);
    CHECK(id(-i) == -i);
  }
  CHECK(id.to_string() == "[1,2,3,4]");
}

TEST_CASE("images determine negative side") {
  SignedPermutation a(std::vector<int>{-2, -1, 3});
  CHECK(a(1) == -2);
  CHECK(a(-1) == 2);
  CHECK(a(-2) == 1);
  CHECK(a(3) == 3);
}

TEST_CASE("invalid images rejected") {
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, 1, 3}), domain_error);
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, -1, 3}), domain_error);
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, 5, 3}), domain_error);
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, 0, 3}), domain_error);
}

TEST_CASE("composition is left-to-right") {
  // (a*b)(i) = b(a(i))
  int n = 4;
  SignedPermutation a = s_generator(1, n);  // swaps 1,2
  SignedPermutation b = s_generator(2, n);  // swaps 2,3
  SignedPermutation ab = compose(a, b);
  CHECK(ab(1) == 3);  // a: 1->2, b: 2->3
  CHECK(ab(2) == 1);
  CHECK(ab(3) == 2);
}

TEST_CASE("inverse") {
  SignedPermutation a(std::vector<int>{-3, 1, -2, 4});
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(compose(inverse(a), a).is_identity());
}

TEST_CASE("generator permutations") {
  int n = 4;
  SignedPermutation sp = s_prime_generator(n);
  CHECK(sp(1) == -2);
  CHECK(sp(2) == -1);
  CHECK(sp(3) == 3);

  SignedPermutation t3 = t_generator(3, n);
  CHECK(t3(1) == 3);
  CHECK(t3(2) == 1);
  CHECK(t3(3) == 2);
  CHECK(t3(4) == 4);

  SignedPermutation w2 = w_generator(2, n);
  CHECK(w2(1) == -1);
  CHECK(w2(2) == 2);
  CHECK(w2(3) == -3);
  CHECK(w2(4) == 4);
}

TEST_CASE("Coxeter relations of type D") {
  int n = 5;
  SignedPermutation sp = s_prime_generator(n);
  auto s = [&](int i) { return s_generator(i, n); };
  auto ord = [&](SignedPermutation g, int m) {
    SignedPermutation cur(n);
    for (int k = 0; k < m; ++k) cur = compose(cur, g);
    return cur.is_identity();
  };
  // involutions
  CHECK(ord(sp, 2));
  for (int i = 1; i < n; ++i) CHECK(ord(s(i), 2));
  // braid: (s_i s_{i+1})^3 = 1, (s_1' s_2)^3 = 1
  for (int i = 1; i + 1 < n; ++i) CHECK(ord(compose(s(i), s(i + 1)), 3));
  CHECK(ord(compose(sp, s(2)), 3));
  // commuting pairs: (s_1' s_1)^2 = 1, (s_1' s_i)^2 = 1 for i >= 3
  CHECK(ord(compose(sp, s(1)), 2));
  for (int i = 3; i < n; ++i) CHECK(ord(compose(sp, s(i)), 2));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) CHECK(ord(compose(s(i), s(j)), 2));
}

TEST_CASE("t and w generator orders") {
  int n = 6;
  for (int m = 2; m <= n; ++m) {
    SignedPermutation t = t_generator(m, n);
    SignedPermutation cur(n);
    int ord = 0;
    do {
      cur = compose(cur, t);
      ++ord;
    } while (!cur.is_identity());
    CHECK(ord == m);
  }
  for (int L = 1; L < n; ++L) {
    SignedPermutation w = w_generator(L, n);
    CHECK(compose(w, w).is_identity());
    CHECK(w(1) == -1);
    CHECK(w(L + 1) == -(L + 1));
  }
}

TEST_CASE("letter-to-term identities") {
  int n = 6;
  // s_1 = t_2
  CHECK(s_generator(1, n) == t_generator(2, n));
  // s_i = t_i^{i-1} * t_{i+1} for i >= 2
  for (int i = 2; i < n; ++i) {
    SignedPermutation prod(n);
    for (int k = 0; k < i - 1; ++k) prod = compose(prod, t_generator(i, n));
    prod = compose(prod, t_generator(i + 1, n));
    CHECK(s_generator(i, n) == prod);
  }
  // s_1' = w_1 * t_2
  CHECK(s_prime_generator(n) ==
        compose(w_generator(1, n), t_generator(2, n)));
}

TEST_CASE("phi strips signs") {
  SignedPermutation a(std::vector<int>{-3, 1, -2, 4});
  SignedPermutation u = phi(a);
  CHECK(u(1) == 3);
  CHECK(u(2) == 1);
  CHECK(u(3) == 2);
  CHECK(all_positive(u));
}

TEST_CASE("D membership is even negative count") {
  CHECK(is_d_element(SignedPermutation(std::vector<int>{-2, -1, 3})));
  CHECK_FALSE(is_d_element(SignedPermutation(std::vector<int>{-1, 2, 3})));
  CHECK(is_d_element(SignedPermutation(std::vector<int>{1, 2, 3})));
}

TEST_CASE("evaluate_word multiplies letters in order") {
  MixedWord w{4, {MixedLetter::s(1), MixedLetter::s(2)}};
  CHECK(evaluate_word(w) ==
        compose(s_generator(1, 4), s_generator(2, 4)));
  MixedWord e{4, {}};
  CHECK(evaluate_word(e).is_identity());
}

TEST_CASE("parse_permutation round trip") {
  SignedPermutation a(std::vector<int>{-2, -1, -4, -3});
  CHECK(parse_permutation(a.to_string()) == a);
  CHECK(parse_permutation("[ -2, -1, -4, -3 ]") == a);
  CHECK_THROWS_AS(parse_permutation("[1,1]"), domain_error);
  CHECK_THROWS_AS(parse_permutation("1,2"), domain_error);
}

TEST_CASE("key is injective over D_4") {
  // base-2n digit key: distinct permutations get distinct keys
  std::vector<int> base{1, 2, 3, 4};
  std::set<uint64_t> keys;
  int count = 0;
  std::sort(base.begin(), base.end());
  do {
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<int> img = base;
      for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) img[static_cast<size_t>(i)] *= -1;
      keys.insert(SignedPermutation(img).key());
      ++count;
    }
  } while (std::next_permutation(base.begin(), base.end()));
  CHECK(static_cast<int>(keys.size()) == count);
}
