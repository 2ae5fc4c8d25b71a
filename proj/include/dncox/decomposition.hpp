#pragma once

/**
 * @file decomposition.hpp
 * @brief Block and bullet/circle decompositions of D_n canonical forms, and
 *        the Coxeter-length formulas and reduced normal forms built on them.
 *
 * Every D_n canonical form splits into alternating "circle" blocks (runs of
 * t-powers) and "bullet" blocks (runs of w-involutions).  When the unsigned
 * part is elementary, the whole element factors uniquely as π = π•·π° with
 * π• a product of distinct commuting w-involutions and π° the unsigned part;
 * in general the unsigned part is first split into elementary factors, each
 * dotted factor is rewritten into (w-list)·(elementary circle) shape with
 * the exchange engine, and lengths and reduced words are assembled factor by
 * factor.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dncox/exchange.hpp"
#include "dncox/factorization.hpp"
#include "dncox/ogs.hpp"

namespace dncox {

// ---------------------------------------------------------------------------
// Alternating block decomposition.
// ---------------------------------------------------------------------------

struct BlockDecomposition {
  int n = 0;
  std::vector<TermList> circles;          ///< μ circle blocks (first/last may be empty)
  std::vector<std::vector<int>> bullets;  ///< μ−1 bullet blocks (w-indices, increasing)

  int mu() const { return static_cast<int>(circles.size()); }
};

inline BlockDecomposition block_decompose(const DnOgsForm& form) {
  BlockDecomposition bd;
  bd.n = form.n;
  bd.circles.emplace_back();
  for (const Term& t : support_terms(form).terms) {
    if (t.kind == Term::Kind::T) {
      if (!bd.bullets.empty() && bd.bullets.size() == bd.circles.size())
        bd.circles.emplace_back();
      if (bd.circles.size() == bd.bullets.size()) bd.circles.emplace_back();
      bd.circles.back().emplace_back(t.index, t.exp);
    } else {
      if (bd.bullets.size() < bd.circles.size()) bd.bullets.emplace_back();
      bd.bullets.back().push_back(t.index);
    }
  }
  if (bd.circles.size() == bd.bullets.size()) bd.circles.emplace_back();
  return bd;
}

/// Per-bullet-block statistics (meaningful when the unsigned part is
/// elementary): maj_α = exponent mass of the circle blocks before block α,
/// ρ_α = maj(π′) − maj_α, and ϱ_L = L − ρ_α for L ≥ maj(π′), else L.
struct BlockStatistics {
  std::vector<int> maj_alpha;
  std::vector<int> rho_alpha;
  std::vector<std::vector<int>> varrho;  ///< aligned with the bullet blocks
};

inline BlockStatistics block_statistics(const BlockDecomposition& bd) {
  BlockStatistics st;
  int total = 0;
  for (const TermList& c : bd.circles) total += exponent_sum(c);
  int running = 0;
  for (size_t a = 0; a < bd.bullets.size(); ++a) {
    running += exponent_sum(bd.circles[a]);
    st.maj_alpha.push_back(running);
    st.rho_alpha.push_back(total - running);
    std::vector<int> vr;
    for (int L : bd.bullets[a])
      vr.push_back(L >= total ? L - (total - running) : L);
    st.varrho.push_back(std::move(vr));
  }
  return st;
}

// ---------------------------------------------------------------------------
// Bullet/circle decomposition.
// ---------------------------------------------------------------------------

struct BulletCircleDecomposition {
  std::vector<int> w_indices;  ///< strictly increasing
  SnOgsForm circle;
};

namespace detail {

/// Parity (mod 2) multiset of w-indices.
using WParity = std::map<int, int>;

inline void toggle(WParity& m, int L) {
  if (++m[L] == 2) m.erase(L);
}

inline std::vector<int> sorted_indices(const WParity& m) {
  std::vector<int> v;
  for (auto& [L, c] : m)
    if (c % 2) v.push_back(L);
  return v;
}

/**
 * Closed-form bullet part of a dotted factor whose circle is elementary:
 * all of its w-indices, plus w_{maj_α} for every bullet block α with an odd
 * number of w's whose cumulative circle mass maj_α is positive and below the
 * first t-index.  Cancellation is mod 2.
 */
inline WParity elementary_bullet_multiset(const std::vector<Term>& dotted) {
  WParity out;
  int k1 = 0;
  for (const Term& t : dotted)
    if (t.kind == Term::Kind::T) {
      k1 = t.index;
      break;
    }
  int mass = 0;  // cumulative t-exponent mass before the current position
  size_t i = 0;
  while (i < dotted.size()) {
    if (dotted[i].kind == Term::Kind::T) {
      mass += dotted[i].exp;
      ++i;
      continue;
    }
    int nu = 0;
    while (i < dotted.size() && dotted[i].kind == Term::Kind::W) {
      toggle(out, dotted[i].index);
      ++nu;
      ++i;
    }
    if (nu % 2 == 1 && mass >= 1 && mass < k1) toggle(out, mass);
  }
  return out;
}

/**
 * Migrate one w (index p) leftwards across a whole circle of t-terms,
 * entering from the right.  Oversized t-indices are crossed by the t·w
 * exchange law (spawning at most two smaller w's, handled recursively);
 * once the remaining prefix tops out at index ≤ p it is crossed wholesale,
 * possibly emitting w_{maj(prefix)}.  Returns the multiset of w-indices
 * arriving on the left of the circle.
 */
inline void migrate_w(const TermList& circle, size_t pos, int p, WParity& out) {
  while (pos > 0 && circle[pos - 1].first > p) {
    auto [q, iq] = circle[pos - 1];
    auto z = exchange_tw(q, iq, p);
    // z = [w.., t_q^{iq}]; recurse on all but the last w, keep the last as
    // the continuing traveler.
    for (size_t i = 0; i + 2 < z.size(); ++i)
      migrate_w(circle, pos - 1, z[i].index, out);
    p = z[z.size() - 2].index;
    --pos;
  }
  if (pos == 0) {
    toggle(out, p);
    return;
  }
  // Remaining prefix circle[0..pos) is elementary with last index ≤ p:
  // cross it in one step.
  int m = 0;
  for (size_t i = 0; i < pos; ++i) m += circle[i].second;
  if (m < circle.front().first) toggle(out, m);
  toggle(out, p);
}

}  // namespace detail

/// One factor of the blocked shape: a sorted list of w-involutions followed
/// by one elementary circle (a factor of the unsigned part).
struct BlockedFactor {
  std::vector<int> w_list;  ///< strictly increasing
  TermList circle;
};

/**
 * Rewrite a canonical form into the blocked shape Π_v (w-list_v · circle_v)
 * where the circles are the elementary factors of the unsigned part and
 * each w rests in front of the factor whose maj-interval contains its index.
 * The product of the blocked factors equals the original element.
 */
inline std::vector<BlockedFactor> blocked_factors(const DnOgsForm& form) {
  std::vector<Term> terms = support_terms(form).terms;
  ElementaryFactorization fact = factorize_elementary(form.phi_form());
  int z = fact.z();
  if (z == 0) {
    // Pure bullet element: a single degenerate factor with no circle.
    BlockedFactor bf;
    for (const Term& t : terms) bf.w_list.push_back(t.index);
    return {bf};
  }
  std::vector<int> sigma(static_cast<size_t>(z));
  for (int v = 0; v < z; ++v) sigma[static_cast<size_t>(v)] = fact.factor_maj(v);

  // Build the dotted factors: the t-terms split exactly as in the unsigned
  // factorization; each w attaches to the factor whose maj-interval
  // [σ_v, σ_{v+1}) contains its index (indices below σ_1 attach to factor 1),
  // positioned by its canonical slot (after t-index = its own index).
  std::vector<std::vector<Term>> dotted(static_cast<size_t>(z));
  auto factor_of_w = [&](int j) {
    int v = 0;
    while (v + 1 < z && j >= sigma[static_cast<size_t>(v + 1)]) ++v;
    return v;
  };
  {
    std::vector<std::pair<int, int>> ws;  // (index, factor)
    for (const Term& t : terms)
      if (t.kind == Term::Kind::W) ws.emplace_back(t.index, factor_of_w(t.index));
    size_t wi = 0;
    for (int v = 0; v < z; ++v) {
      for (auto& [k, i] : fact.factors[static_cast<size_t>(v)]) {
        while (wi < ws.size() && ws[wi].second == v && ws[wi].first < k)
          dotted[static_cast<size_t>(v)].push_back(Term::w(ws[wi++].first));
        dotted[static_cast<size_t>(v)].push_back(Term::t(k, i));
      }
      while (wi < ws.size() && ws[wi].second == v)
        dotted[static_cast<size_t>(v)].push_back(Term::w(ws[wi++].first));
    }
    if (wi != ws.size())
      throw domain_error("blocked_factors: inconsistent w attachment");
  }

  // Per factor: pull its w's to the factor front by the closed-form bullet
  // extraction; then migrate any w whose index is below the factor's maj
  // across the preceding circles (right to left, so arrivals cascade).
  std::vector<detail::WParity> front(static_cast<size_t>(z));
  std::vector<TermList> circles(static_cast<size_t>(z));
  for (int v = 0; v < z; ++v) {
    circles[static_cast<size_t>(v)] = fact.factors[static_cast<size_t>(v)];
    front[static_cast<size_t>(v)] =
        detail::elementary_bullet_multiset(dotted[static_cast<size_t>(v)]);
  }
  for (int v = z - 1; v >= 1; --v) {
    detail::WParity stay, arrivals;
    for (auto& [L, c] : front[static_cast<size_t>(v)]) {
      if (c % 2 == 0) continue;
      if (L >= sigma[static_cast<size_t>(v)])
        detail::toggle(stay, L);
      else
        detail::migrate_w(circles[static_cast<size_t>(v - 1)],
                          circles[static_cast<size_t>(v - 1)].size(), L,
                          arrivals);
    }
    front[static_cast<size_t>(v)] = std::move(stay);
    for (auto& [L, c] : arrivals)
      if (c % 2) detail::toggle(front[static_cast<size_t>(v - 1)], L);
  }

  std::vector<BlockedFactor> out(static_cast<size_t>(z));
  for (int v = 0; v < z; ++v) {
    out[static_cast<size_t>(v)].w_list =
        detail::sorted_indices(front[static_cast<size_t>(v)]);
    out[static_cast<size_t>(v)].circle = circles[static_cast<size_t>(v)];
  }
  return out;
}

/**
 * π = π•·π° with π• a product of distinct w-involutions and π° realizing the
 * unsigned part.  Computed from the blocked shape by pushing every w across
 * all preceding circles (each crossing of a circle with maj < k_1 spawns a
 * w_{maj}, which continues leftward itself).
 */
inline BulletCircleDecomposition bullet_circle_decompose(const DnOgsForm& form) {
  std::vector<BlockedFactor> bf = blocked_factors(form);
  detail::WParity global;
  // Push the w's of factor v across circles v−1 .. 0.
  std::function<void(int, int)> push_front = [&](int v, int q) {
    for (int c = v - 1; c >= 0; --c) {
      const TermList& circ = bf[static_cast<size_t>(c)].circle;
      int m = exponent_sum(circ);
      if (!circ.empty() && m < circ.front().first) push_front(c, m);
    }
    detail::toggle(global, q);
  };
  for (size_t v = 0; v < bf.size(); ++v)
    for (int q : bf[v].w_list) push_front(static_cast<int>(v), q);

  BulletCircleDecomposition out{detail::sorted_indices(global),
                                form.phi_form()};
  return out;
}

/// Positions x with π(x) = −π′(x): the points negated by the bullet part.
inline std::vector<int> negation_set(const DnOgsForm& form) {
  if (!is_elementary(form.phi_form()))
    throw domain_error("negation_set: unsigned part must be elementary");
  BulletCircleDecomposition d = bullet_circle_decompose(form);
  std::vector<int> N;
  if (d.w_indices.size() % 2 == 1) N.push_back(1);
  for (int L : d.w_indices) N.push_back(L + 1);
  std::sort(N.begin(), N.end());
  return N;
}

// ---------------------------------------------------------------------------
// Length formulas.
// ---------------------------------------------------------------------------

/// Σ k·i − maj² for one elementary circle (its single-descent length).
inline int elementary_circle_length(const TermList& circle) {
  int len = 0, m = 0;
  for (auto& [k, i] : circle) {
    len += k * i;
    m += i;
  }
  return len - m * m;
}

/// The piecewise ϱ̇ statistic of a w-index against an elementary circle:
/// L unless maj ≤ L < k_m, in which case L minus the exponent mass sitting
/// at indices above L.
inline int varrho_dot(int L, const TermList& circle) {
  if (circle.empty()) return L;
  int m = exponent_sum(circle);
  if (L < m || L >= circle.back().first) return L;
  int above = 0;
  for (auto& [k, i] : circle)
    if (k > L) above += i;
  return L - above;
}

/// ℓ(w_L·π°) for elementary π°, by direct case dispatch on L against
/// maj, k_1, the interior brackets, and k_m.
inline int dn_length_single_w(int L, const TermList& circle) {
  if (circle.empty()) return 2 * L;
  int lp = elementary_circle_length(circle);
  int m = exponent_sum(circle);
  int k1 = circle.front().first, km = circle.back().first;
  if (!is_elementary(circle))
    throw domain_error("dn_length_single_w: circle not elementary");
  if (L < m) return 2 * L + lp;
  if (L >= km) return 2 * L + lp;
  if (L == m && m < k1) return lp;
  if (L < k1) return 2 * (L - m) + lp;
  // k_r ≤ L < k_{r+1}: subtract the exponent mass above L.
  int above = 0;
  for (auto& [k, i] : circle)
    if (k > L) above += i;
  return 2 * (L - above) + lp;
}

/// ℓ(π•·π°) = ℓ(π°) + 2·Σ ϱ̇_{L} for an elementary circle.
inline int dn_length_elementary(const std::vector<int>& w_indices,
                                const TermList& circle) {
  if (!is_elementary(circle))
    throw domain_error("dn_length_elementary: circle not elementary");
  int len = elementary_circle_length(circle);
  for (int L : w_indices) len += 2 * varrho_dot(L, circle);
  return len;
}

inline int dn_length_elementary(const BulletCircleDecomposition& d) {
  return dn_length_elementary(d.w_indices, term_list(d.circle));
}

/// Coxeter length of any D_n canonical form: sum of the per-factor lengths
/// of its blocked shape.
inline int dn_length(const DnOgsForm& form) {
  int len = 0;
  for (const BlockedFactor& f : blocked_factors(form))
    len += dn_length_elementary(f.w_list, f.circle);
  return len;
}

// ---------------------------------------------------------------------------
// Reduced normal form.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<MixedLetter> w_word(int L) {
  std::vector<MixedLetter> w;
  for (int k = L; k >= 1; --k) w.push_back(MixedLetter::s(k));
  w.push_back(MixedLetter::s_prime());
  for (int k = 2; k <= L; ++k) w.push_back(MixedLetter::s(k));
  return w;
}

/// The diagram automorphism s_1 <-> s_{1'} applied to a block's letters
/// (all other generators are fixed).
inline void flip_pivot(NormBlock& b) {
  for (MixedLetter& l : b.letters) {
    if (l.kind == LetterKind::S && l.index == 1)
      l = MixedLetter::s_prime();
    else if (l.kind == LetterKind::SPrime)
      l = MixedLetter::s(1);
  }
}

/**
 * Blocks for one blocked factor: the circle's descending runs, with each
 * resting w either inserted as a full w-word block (below maj or above k_m)
 * or absorbed into the run at u = L (descend all the way, pivot, ascend back
 * to L − ρ).  The w's are landed right-to-left (largest index first); every
 * landing commutes the w across the blocks below its level, which applies
 * the s_1 <-> s_{1'} diagram automorphism to them (blocks below level L only
 * involve s_1, s_{1'}, s_2..s_{L−1}, which w_L conjugates exactly that way).
 * A replacement block is itself flipped once per previously landed w, since
 * those landings flipped the region the replacement identity applies to.
 */
inline void blocked_factor_norm(const BlockedFactor& f,
                                std::map<int, NormBlock>& blocks) {
  const TermList& c = f.circle;
  std::map<int, NormBlock> runs;
  for (NormBlock& b : elementary_norm_blocks(c)) runs[b.u] = std::move(b);
  int m = exponent_sum(c);
  int k1 = c.empty() ? 0 : c.front().first;
  int km = c.empty() ? 0 : c.back().first;
  int landed = 0;
  for (auto it = f.w_list.rbegin(); it != f.w_list.rend(); ++it) {
    int L = *it;
    for (auto& [u, b] : runs)
      if (u < L) flip_pivot(b);
    if (c.empty() || L < m || L >= km) {
      runs[L] = NormBlock{L, w_word(L)};
    } else {
      NormBlock b{L, {}};
      if (L == m && m < k1) {
        for (int k = m; k >= 2; --k) b.letters.push_back(MixedLetter::s(k));
        b.letters.push_back(MixedLetter::s_prime());
      } else {
        int rho = static_cast<int>(runs.at(L).letters.size());
        for (int k = L; k >= 1; --k) b.letters.push_back(MixedLetter::s(k));
        b.letters.push_back(MixedLetter::s_prime());
        for (int k = 2; k <= L - rho; ++k)
          b.letters.push_back(MixedLetter::s(k));
      }
      if (landed % 2) flip_pivot(b);
      runs[L] = std::move(b);
    }
    ++landed;
  }
  for (auto& [u, b] : runs) {
    if (blocks.count(u))
      throw domain_error("dn_normal_form: block collision");  // unreachable
    blocks[u] = std::move(b);
  }
}

}  // namespace detail

/// Reduced normal-form word of a D_n canonical form, grouped into the
/// per-level blocks (strictly increasing block keys).
inline std::vector<NormBlock> dn_normal_blocks(const DnOgsForm& form) {
  std::map<int, NormBlock> blocks;
  for (const BlockedFactor& f : blocked_factors(form))
    detail::blocked_factor_norm(f, blocks);
  std::vector<NormBlock> out;
  for (auto& [u, b] : blocks) out.push_back(std::move(b));
  return out;
}

inline MixedWord dn_normal_form(const DnOgsForm& form) {
  return blocks_to_word(dn_normal_blocks(form), form.n);
}

}  // namespace dncox
