#pragma once

/**
 * @file subgroups.hpp
 * @brief Structural subgroups of D_n and the independent brute-force oracles
 *        (exhaustive enumeration, Cayley-graph BFS, inversion statistic).
 *
 * The canonical form exposes three structural subgroups: S°_n (all w-
 * exponents zero, a parabolic copy of S_n), Id•_n (all t-exponents zero,
 * elementary abelian of order 2^{n−1}), and the parabolic copy S°_{n'}
 * generated by {s_{1'}, s_2..s_{n−1}}; prefixes of the generator chain embed
 * the hyperoctahedral groups B_m.  The oracles here are deliberately
 * independent of the closed-form machinery so they can arbitrate it.
 */

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "dncox/decomposition.hpp"
#include "dncox/factorization.hpp"
#include "dncox/ogs.hpp"
#include "dncox/signed_permutation.hpp"

namespace dncox {

/// All 2^{n−1}·n! elements of D_n, each exactly once.
inline std::vector<SignedPermutation> enumerate_dn(int n) {
  if (n < 2 || n > 7) throw domain_error("enumerate_dn: rank guard 2..7");
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      std::vector<int> img = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) img[static_cast<size_t>(i)] = -img[static_cast<size_t>(i)];
      out.emplace_back(std::move(img));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

/// Cayley-graph distances from the identity over {s_{1'}, s_1..s_{n−1}}.
struct LengthTable {
  int n;
  std::unordered_map<uint64_t, int> dist;

  int at(const SignedPermutation& a) const {
    auto it = dist.find(a.key());
    if (it == dist.end()) throw domain_error("LengthTable: element not in D_n");
    return it->second;
  }
};

inline LengthTable bfs_length_table(int n) {
  if (n < 2 || n > 7) throw domain_error("bfs_length_table: rank guard 2..7");
  std::vector<SignedPermutation> gens;
  gens.push_back(s_prime_generator(n));
  for (int i = 1; i < n; ++i) gens.push_back(s_generator(i, n));
  LengthTable table{n, {}};
  std::deque<SignedPermutation> frontier;
  SignedPermutation id(n);
  table.dist[id.key()] = 0;
  frontier.push_back(id);
  while (!frontier.empty()) {
    SignedPermutation cur = std::move(frontier.front());
    frontier.pop_front();
    int d = table.dist[cur.key()];
    for (const SignedPermutation& g : gens) {
      SignedPermutation next = compose(cur, g);
      if (table.dist.emplace(next.key(), d + 1).second)
        frontier.push_back(next);
    }
  }
  return table;
}

/// Inversions plus negative-sum pairs; the scalable length oracle (standard
/// Coxeter combinatorics, bootstrapped against BFS before use at high rank).
inline int statistic_length(const SignedPermutation& a) {
  if (!is_d_element(a)) throw domain_error("statistic_length: not in D_n");
  int len = 0;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j) {
      if (a(i) > a(j)) ++len;
      if (a(i) + a(j) < 0) ++len;
    }
  return len;
}

// ---------------------------------------------------------------------------
// Structural subgroup membership.
// ---------------------------------------------------------------------------

inline bool is_in_s_circle(const DnOgsForm& form) {
  for (int L = 1; L < form.n; ++L)
    if (form.j(L)) return false;
  return true;
}

inline bool is_in_id_bullet(const DnOgsForm& form) {
  for (int k = 2; k <= form.n; ++k)
    if (form.i(k)) return false;
  return true;
}

/// For a with |a(i)| = i for all i: the w-indices {k−1 : a(k) = −k, k ≥ 2}
/// whose product reproduces a (the sign at position 1 is forced by parity).
inline std::vector<int> id_bullet_from_negations(const SignedPermutation& a) {
  for (int i = 1; i <= a.n(); ++i)
    if (std::abs(a(i)) != i)
      throw domain_error("id_bullet_from_negations: unsigned part not identity");
  if (!is_d_element(a))
    throw domain_error("id_bullet_from_negations: not in D_n");
  std::vector<int> ws;
  for (int k = 2; k <= a.n(); ++k)
    if (a(k) == -k) ws.push_back(k - 1);
  return ws;
}

/**
 * Membership in the parabolic copy of S_n generated by {s_{1'}, s_2..s_{n−1}}:
 * after factorizing the unsigned part, each factor must carry exactly the
 * w-involution w_{maj} when its maj is below its first index, and none when
 * maj equals it.
 */
inline bool is_in_s_prime(const DnOgsForm& form) {
  ElementaryFactorization fact = factorize_elementary(form.phi_form());
  int z = fact.z();
  std::vector<std::vector<int>> attached(static_cast<size_t>(z ? z : 1));
  for (int L = 1; L < form.n; ++L) {
    if (!form.j(L)) continue;
    if (z == 0) return false;
    int v = 0;
    while (v + 1 < z && L >= fact.factor_maj(v + 1)) ++v;
    attached[static_cast<size_t>(v)].push_back(L);
  }
  for (int v = 0; v < z; ++v) {
    int m = fact.factor_maj(v);
    int h1 = fact.factors[static_cast<size_t>(v)].front().first;
    const std::vector<int>& ws = attached[static_cast<size_t>(v)];
    if (m < h1) {
      if (ws.size() != 1 || ws[0] != m) return false;
    } else {
      if (!ws.empty()) return false;
    }
  }
  return true;
}

/// Breadth-first closure of a generating set, capped (safety bound).
inline std::set<SignedPermutation> subgroup_closure(
    const std::vector<SignedPermutation>& gens, size_t cap) {
  if (gens.empty()) throw domain_error("subgroup_closure: no generators");
  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> frontier;
  SignedPermutation id(gens.front().n());
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    SignedPermutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const SignedPermutation& g : gens) {
      SignedPermutation next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw domain_error("subgroup_closure: cap exceeded");
        frontier.push_back(next);
      }
    }
  }
  return seen;
}

/// The embedded hyperoctahedral group B_m inside D_n: all values of the
/// forms w_1^{j_1}·t_2^{i_2}·w_2^{j_2}···t_m^{i_m}·w_m^{j_m}; order 2^m·m!.
inline std::set<SignedPermutation> bm_subgroup_elements(int m, int n) {
  if (m < 1 || m >= n || n > 6)
    throw domain_error("bm_subgroup_elements: rank guard m < n <= 6");
  std::set<SignedPermutation> out;
  std::vector<int> exps;  // j_1, i_2, j_2, ..., i_m, j_m
  std::function<void(int)> rec = [&](int k) {
    if (k > m) {
      MixedWord w{n, {}};
      size_t idx = 0;
      for (int L = 1; L <= m; ++L) {
        if (L >= 2 && exps[idx] > 0) w.letters.push_back(MixedLetter::t(L, exps[idx]));
        if (L >= 2) ++idx;
        if (exps[idx]) w.letters.push_back(MixedLetter::w(L));
        ++idx;
      }
      out.insert(evaluate_word(w));
      return;
    }
    // t_k exponent (k >= 2), then w_k flag.
    if (k >= 2) {
      for (int i = 0; i < k; ++i) {
        exps.push_back(i);
        for (int j = 0; j <= 1; ++j) {
          exps.push_back(j);
          // recurse after pushing w flag
          rec(k + 1);
          exps.pop_back();
        }
        exps.pop_back();
      }
    } else {
      for (int j = 0; j <= 1; ++j) {
        exps.push_back(j);
        rec(k + 1);
        exps.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

}  // namespace dncox
