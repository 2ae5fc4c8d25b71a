#pragma once

/**
 * @file factorization.hpp
 * @brief Elementary elements, elementary factorization, descents, length and
 *        reduced normal forms for the S_n canonical-form layer.
 *
 * A canonical form t_{k_1}^{i_1}···t_{k_m}^{i_m} (nonzero exponents) is
 * elementary when Σ i_j ≤ k_1; elementary elements have the single descent
 * maj = Σ i_j.  Every form splits uniquely into a minimal chain of
 * elementary factors whose maj values interlock with the factor boundary
 * indices; length and reduced words are computed factor by factor.
 */

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dncox/ogs.hpp"
#include "dncox/signed_permutation.hpp"

namespace dncox {

/// (index, exponent) pairs of the nonzero terms, in increasing index order.
using TermList = std::vector<std::pair<int, int>>;

inline TermList term_list(const SnOgsForm& form) {
  TermList ts;
  for (int k = 2; k <= form.n; ++k)
    if (form.i(k) > 0) ts.emplace_back(k, form.i(k));
  return ts;
}

/// Descent positions {x : π(x) > π(x+1)} of an all-positive permutation.
inline std::set<int> descent_positions(const SignedPermutation& a) {
  std::set<int> d;
  for (int x = 1; x < a.n(); ++x)
    if (a(x) > a(x + 1)) d.insert(x);
  return d;
}

/// Major index: sum of descent positions.  For elementary forms this equals
/// the exponent sum of the form.
inline int maj(const SnOgsForm& form) {
  int m = 0;
  for (int d : descent_positions(realize_sn(form))) m += d;
  return m;
}

inline int exponent_sum(const TermList& ts) {
  int s = 0;
  for (auto& [k, i] : ts) s += i;
  return s;
}

inline bool is_elementary(const TermList& ts) {
  return ts.empty() || exponent_sum(ts) <= ts.front().first;
}

inline bool is_elementary(const SnOgsForm& form) {
  return is_elementary(term_list(form));
}

// ---------------------------------------------------------------------------
// Elementary factorization.
// ---------------------------------------------------------------------------

struct ElementaryFactorization {
  std::vector<TermList> factors;  ///< each factor elementary, indices increasing

  int z() const { return static_cast<int>(factors.size()); }

  /// maj of factor v (0-based): its exponent sum.
  int factor_maj(int v) const { return exponent_sum(factors[static_cast<size_t>(v)]); }

  /// Constraint check: per-factor elementarity plus the boundary chain
  /// (last index of factor v−1 ≤ maj of factor v ≤ first index of factor v).
  bool satisfies_constraints() const {
    for (size_t v = 0; v < factors.size(); ++v) {
      const TermList& f = factors[v];
      if (f.empty()) return false;
      for (auto& [k, i] : f)
        if (i < 1 || i >= k) return false;
      for (size_t j = 1; j < f.size(); ++j)
        if (f[j].first <= f[j - 1].first) return false;
      int m = exponent_sum(f);
      if (m > f.front().first) return false;
      if (v > 0 && factors[v - 1].back().first > m) return false;
    }
    return true;
  }

  /// Concatenate factors back into one term list (re-merging a power split
  /// across a shared boundary index).
  TermList reassemble() const {
    TermList out;
    for (const TermList& f : factors)
      for (auto& [k, i] : f) {
        if (!out.empty() && out.back().first == k)
          out.back().second += i;
        else
          out.emplace_back(k, i);
      }
    return out;
  }
};

namespace detail {

struct FactorSearchResult {
  ElementaryFactorization fact;
  bool unique = true;
};

struct FactorSearch {
  const TermList& ts;
  // memo key: (position, available exponent at position, lower bound)
  std::map<std::tuple<int, int, int>, std::optional<FactorSearchResult>> memo;

  /// Best (minimal factor count) factorization of ts[pos..], where the next
  /// factor opens at term pos with `avail` exponent remaining and must reach
  /// an exponent sum ≥ lb.  Tracks whether the optimum is unique.
  std::optional<FactorSearchResult> solve(int pos, int avail, int lb) {
    auto key = std::make_tuple(pos, avail, lb);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int cap = ts[static_cast<size_t>(pos)].first;
    const int m = static_cast<int>(ts.size());
    std::optional<FactorSearchResult> best;
    TermList factor;
    int sum = 0;

    auto consider = [&](ElementaryFactorization cand, bool cand_unique) {
      if (!best || cand.z() < best->fact.z()) {
        best = FactorSearchResult{std::move(cand), cand_unique};
      } else if (cand.z() == best->fact.z() &&
                 !(cand.factors == best->fact.factors)) {
        best->unique = false;
      }
    };
    auto close_with_rest = [&](int next_pos, int next_avail, int next_lb) {
      if (sum < lb || sum > cap || factor.empty()) return;
      if (next_pos == m) {
        ElementaryFactorization f;
        f.factors.push_back(factor);
        consider(std::move(f), true);
        return;
      }
      auto rest = solve(next_pos, next_avail, next_lb);
      if (!rest) return;
      ElementaryFactorization f;
      f.factors.push_back(factor);
      f.factors.insert(f.factors.end(), rest->fact.factors.begin(),
                       rest->fact.factors.end());
      consider(std::move(f), rest->unique);
    };
    // Walk the factor's extent; at each stopping point consider closing,
    // and at each overflow consider boundary exponent splits.
    std::function<void(int, int)> extend = [&](int j, int avail_j) {
      if (j == m) {
        close_with_rest(m, 0, 0);
        return;
      }
      int kj = ts[static_cast<size_t>(j)].first;
      // Option: close before term j; next factor must reach the last index
      // taken into this factor.
      if (!factor.empty()) close_with_rest(j, avail_j, factor.back().first);
      // Option: take the whole exponent and keep extending.
      if (sum + avail_j <= cap) {
        factor.emplace_back(kj, avail_j);
        sum += avail_j;
        extend(j + 1, j + 1 < m ? ts[static_cast<size_t>(j + 1)].second : 0);
        sum -= avail_j;
        factor.pop_back();
      }
      // Option: split term j across the boundary (d stays here, the rest
      // opens the next factor at the shared index kj).
      for (int d = 1; d < avail_j && sum + d <= cap; ++d) {
        factor.emplace_back(kj, d);
        sum += d;
        close_with_rest(j, avail_j - d, kj);
        sum -= d;
        factor.pop_back();
      }
    };
    extend(pos, avail);
    memo[key] = best;
    return best;
  }
};

}  // namespace detail

/// The unique minimal factorization into elementary factors.
inline ElementaryFactorization factorize_elementary(const TermList& ts) {
  if (ts.empty()) return {};
  detail::FactorSearch search{ts, {}};
  auto best = search.solve(0, ts.front().second, 0);
  if (!best) throw domain_error("factorize_elementary: no factorization");
  if (!best->unique)
    throw domain_error("factorize_elementary: minimal factorization not unique");
  return best->fact;
}

inline ElementaryFactorization factorize_elementary(const SnOgsForm& form) {
  return factorize_elementary(term_list(form));
}

// ---------------------------------------------------------------------------
// Length, descents, reduced normal form.
// ---------------------------------------------------------------------------

/// Coxeter length: Σ k·i over the form minus Σ maj(factor)².
inline int sn_length(const SnOgsForm& form) {
  int len = 0;
  for (int k = 2; k <= form.n; ++k) len += k * form.i(k);
  for (const TermList& f : factorize_elementary(form).factors) {
    int m = exponent_sum(f);
    len -= m * m;
  }
  return len;
}

/// Descent set via the factorization: {maj(factor v)}.
inline std::set<int> sn_descents(const SnOgsForm& form) {
  std::set<int> d;
  for (const TermList& f : factorize_elementary(form).factors)
    d.insert(exponent_sum(f));
  return d;
}

/**
 * One block of a reduced normal-form word: either the descending run
 * s_u·s_{u−1}···, or descending-run · s_{1'} · ascending-run.  Blocks are
 * keyed by u and appear in strictly increasing u order.
 */
struct NormBlock {
  int u;
  std::vector<MixedLetter> letters;
};

namespace detail {

/// Reduced-word blocks of one elementary factor: for u from ρ_1 (= maj) up
/// to k_m − 1, the run s_u···s_{u−ρ+1} where ρ = Σ of the exponents at
/// indices above u's bracket.
inline std::vector<NormBlock> elementary_norm_blocks(const TermList& f) {
  std::vector<NormBlock> blocks;
  if (f.empty()) return blocks;
  int g = static_cast<int>(f.size());
  int m1 = exponent_sum(f);
  for (int u = m1; u < f.back().first; ++u) {
    int rho = 0;
    for (int j = 0; j < g; ++j)
      if (u < f[static_cast<size_t>(j)].first)
        rho += f[static_cast<size_t>(j)].second;
    // rho = ρ_{j(u)} with k_{j(u)−1} ≤ u < k_{j(u)}
    NormBlock b{u, {}};
    for (int r = 0; r < rho; ++r) b.letters.push_back(MixedLetter::s(u - r));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace detail

/// Reduced word for an S_n form: concatenated factor norms, grouped in
/// descending-run blocks.
inline std::vector<NormBlock> sn_normal_blocks(const SnOgsForm& form) {
  std::vector<NormBlock> blocks;
  for (const TermList& f : factorize_elementary(form).factors) {
    auto fb = detail::elementary_norm_blocks(f);
    blocks.insert(blocks.end(), fb.begin(), fb.end());
  }
  return blocks;
}

inline MixedWord blocks_to_word(const std::vector<NormBlock>& blocks, int n) {
  MixedWord w{n, {}};
  for (const NormBlock& b : blocks)
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

/// `(s4 s3 s2 s1')(s5 s4)` rendering of a block word.
inline std::string blocks_to_string(const std::vector<NormBlock>& blocks) {
  if (blocks.empty()) return "e";
  std::string s;
  for (const NormBlock& b : blocks) {
    s += '(';
    for (size_t i = 0; i < b.letters.size(); ++i) {
      if (i) s += ' ';
      s += letter_to_string(b.letters[i]);
    }
    s += ')';
  }
  return s;
}

inline MixedWord sn_normal_form(const SnOgsForm& form) {
  return blocks_to_word(sn_normal_blocks(form), form.n);
}

}  // namespace dncox
