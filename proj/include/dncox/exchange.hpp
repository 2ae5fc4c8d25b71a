#pragma once

/**
 * @file exchange.hpp
 * @brief Exchange-law rewriting of generator products into canonical order.
 *
 * The canonical D_n form orders terms as w_1, t_2, w_2, t_3, ..., t_n.  A
 * product of two terms in the wrong order rewrites by a closed-form exchange
 * law into at most three terms in canonical order whose largest index equals
 * the larger input index.  normalize_mixed_word() applies these laws by
 * insertion until any mixed word reaches its unique canonical form.
 */

#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dncox/ogs.hpp"
#include "dncox/signed_permutation.hpp"

namespace dncox {

/// One rewrite step, for optional derivation traces (JSON-lines friendly).
struct TraceRecord {
  std::string rule;
  std::string before;
  std::string after;
};

using TraceSink = std::vector<TraceRecord>;

namespace detail {

/// Merge adjacent equal-index t-terms, reduce exponents mod the index,
/// drop trivial terms.  Input terms must be non-decreasing in order key.
inline std::vector<Term> tidy_terms(std::vector<Term> raw) {
  std::vector<Term> out;
  for (const Term& t : raw) {
    if (t.kind == Term::Kind::T) {
      int e = t.exp % t.index;
      if (e < 0) e += t.index;
      if (!out.empty() && out.back().kind == Term::Kind::T &&
          out.back().index == t.index) {
        out.back().exp = (out.back().exp + e) % t.index;
        if (out.back().exp == 0) out.pop_back();
        continue;
      }
      if (e > 0) out.push_back(Term::t(t.index, e));
    } else {
      if (!out.empty() && out.back() == t) {
        out.pop_back();  // w_L² = 1
        continue;
      }
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace detail

/**
 * Rewrite t_q^{i_q}·t_p^{i_p} (q > p) into canonical order.  Three cases on
 * q − i_q versus p and i_p; the two-term collapsed outputs at the case
 * boundaries (q − i_q = p or q − i_q = i_p) fall out of exponent merging.
 */
inline std::vector<Term> exchange_tt(int q, int iq, int p, int ip) {
  if (!(2 <= p && p < q) || !(1 <= iq && iq < q) || !(1 <= ip && ip < p))
    throw domain_error("exchange_tt: parameters out of range");
  std::vector<Term> raw;
  if (q - iq >= p) {
    raw = {Term::t(iq + ip, iq), Term::t(p + iq, ip), Term::t(q, iq)};
  } else if (q - iq >= ip) {
    raw = {Term::t(iq, p + iq - q), Term::t(iq + ip, q - p),
           Term::t(q, iq + ip)};
  } else {
    raw = {Term::t(p + iq - q, iq + ip - q), Term::t(iq, p - ip),
           Term::t(q, iq + ip - p)};
  }
  return detail::tidy_terms(std::move(raw));
}

/**
 * Rewrite t_q^{i_q}·w_p (q > p) into w-terms followed by t_q^{i_q}.
 * Case split on q versus p + i_q.
 */
inline std::vector<Term> exchange_tw(int q, int iq, int p) {
  if (!(1 <= p && p < q) || !(2 <= q) || !(1 <= iq && iq < q))
    throw domain_error("exchange_tw: parameters out of range");
  int d = p + iq;
  std::vector<Term> out;
  if (q == d) {
    out = {Term::w(iq), Term::t(q, iq)};
  } else if (q > d) {
    out = {Term::w(iq), Term::w(d), Term::t(q, iq)};
  } else {
    out = {Term::w(d - q), Term::w(iq), Term::t(q, iq)};
  }
  return out;
}

/**
 * Rewrite w_q·t_p^{i_p} (p ≤ q) as w_{i_p}·t_p^{i_p}·w_q.  The p = q
 * boundary is sound (oracle-verified); p > q is not covered by this law —
 * route such products through exchange_tw instead.
 */
inline std::vector<Term> exchange_wt(int q, int p, int ip) {
  if (!(2 <= p && p <= q) || !(1 <= ip && ip < p))
    throw domain_error("exchange_wt: parameters out of range");
  return {Term::w(ip), Term::t(p, ip), Term::w(q)};
}

/**
 * Conjugation of single Coxeter letters across w_L:
 * w_L·s_1 = s_{1'}·w_L and w_L·s_{1'} = s_1·w_L (L ≥ 2); w_L·s_k = s_k·w_L
 * for 2 ≤ k ≤ L−1.  Indices k ≥ L+2 also commute by disjoint support
 * (oracle-validated extension of the cited identity).
 */
inline MixedLetter conjugate_w(int L, const MixedLetter& letter) {
  if (letter.kind == LetterKind::SPrime) {
    if (L < 2) throw domain_error("conjugate_w: needs L >= 2");
    return MixedLetter::s(1);
  }
  if (letter.kind != LetterKind::S)
    throw domain_error("conjugate_w: expects a Coxeter letter");
  int k = letter.index;
  if (k == 1) {
    if (L < 2) throw domain_error("conjugate_w: needs L >= 2");
    return MixedLetter::s_prime();
  }
  if ((2 <= k && k <= L - 1) || k >= L + 2) return letter;
  throw domain_error("conjugate_w: letter index outside commuting range");
}

/// w_j·(s_j·s_{j−1}···s_{j−r}) = (s_j·s_{j−1}···s_{j−r})·w_{j−r−1}.
inline std::pair<std::vector<MixedLetter>, int> slide_w_through_run(int j,
                                                                    int r) {
  if (j - r - 1 < 1) throw domain_error("slide_w_through_run: j-r-1 < 1");
  std::vector<MixedLetter> run;
  for (int k = j; k >= j - r; --k) run.push_back(MixedLetter::s(k));
  return {run, j - r - 1};
}

// forward declaration; defined in factorization.hpp
inline int term_exponent_sum(const std::vector<Term>& ts) {
  int s = 0;
  for (const Term& t : ts) s += t.exp;
  return s;
}

/**
 * Push one w across a whole elementary block of t-terms:
 * π₁·w_q = w_q·π₁ when maj(π₁) = k_1, else w_{maj(π₁)}·w_q·π₁.
 * Requires q ≥ the block's last t-index.
 */
inline std::vector<Term> push_w_left(const std::vector<Term>& block, int q) {
  int sum = 0;
  for (const Term& t : block) {
    if (t.kind != Term::Kind::T)
      throw domain_error("push_w_left: block must be t-terms only");
    sum += t.exp;
  }
  if (!block.empty()) {
    if (sum > block.front().index)
      throw domain_error("push_w_left: block not elementary");
    if (q < block.back().index)
      throw domain_error("push_w_left: q below block's last index");
  }
  std::vector<Term> out;
  if (!block.empty() && sum < block.front().index) out.push_back(Term::w(sum));
  out.push_back(Term::w(q));
  out.insert(out.end(), block.begin(), block.end());
  return out;
}

// ---------------------------------------------------------------------------
// Full canonicalization.
// ---------------------------------------------------------------------------

namespace detail {

/// Letter -> term-sequence translation (exact small identities:
/// s_1 = t_2, s_i = t_i^{i−1}·t_{i+1} for i ≥ 2, s_{1'} = w_1·t_2).
inline std::vector<Term> letter_terms(const MixedLetter& l) {
  switch (l.kind) {
    case LetterKind::S:
      if (l.index == 1) return {Term::t(2, 1)};
      return {Term::t(l.index, l.index - 1), Term::t(l.index + 1, 1)};
    case LetterKind::SPrime:
      return {Term::w(1), Term::t(2, 1)};
    case LetterKind::W:
      return {Term::w(l.index)};
    case LetterKind::T: {
      int e = l.exp % l.index;
      if (e < 0) e += l.index;
      if (e == 0) return {};
      return {Term::t(l.index, e)};
    }
  }
  return {};
}

/// The law dispatch for an out-of-order adjacent pair (y before x, with
/// key(y) > key(x)).  Output is sorted by order key; its largest key equals
/// key(y).  That strict drop of every other output key is the termination
/// argument for the insertion loop below.
inline std::vector<Term> exchange_pair(const Term& y, const Term& x,
                                       TraceSink* trace) {
  std::vector<Term> out;
  const char* rule = "";
  if (y.kind == Term::Kind::T && x.kind == Term::Kind::T) {
    int d = y.index - y.exp;
    rule = d >= x.index ? "tt-exchange-case-1"
                        : (d >= x.exp ? "tt-exchange-case-2"
                                      : "tt-exchange-case-3");
    out = exchange_tt(y.index, y.exp, x.index, x.exp);
  } else if (y.kind == Term::Kind::T && x.kind == Term::Kind::W) {
    rule = "tw-exchange";
    out = exchange_tw(y.index, y.exp, x.index);
  } else if (y.kind == Term::Kind::W && x.kind == Term::Kind::T) {
    rule = "wt-exchange";
    out = exchange_wt(y.index, x.index, x.exp);
  } else {
    rule = "w-commute";
    out = {x, y};
  }
  if (trace)
    trace->push_back({rule, terms_to_string({y, x}), terms_to_string(out)});
  return out;
}

inline void insert_term(std::vector<Term>& canon, Term x, TraceSink* trace) {
  for (;;) {
    if (canon.empty() || canon.back().order_key() < x.order_key()) {
      canon.push_back(x);
      return;
    }
    if (canon.back().order_key() == x.order_key()) {
      if (x.kind == Term::Kind::T) {
        int e = (canon.back().exp + x.exp) % x.index;
        if (trace)
          trace->push_back({"t-power-merge",
                            terms_to_string({canon.back(), x}),
                            e ? terms_to_string({Term::t(x.index, e)}) : "e"});
        canon.pop_back();
        if (e > 0) canon.push_back(Term::t(x.index, e));
      } else {
        if (trace)
          trace->push_back(
              {"w-square-cancel", terms_to_string({canon.back(), x}), "e"});
        canon.pop_back();  // w² = 1
      }
      return;
    }
    Term y = canon.back();
    canon.pop_back();
    std::vector<Term> z = exchange_pair(y, x, trace);
    if (z.empty()) return;
    // All but the last output have keys strictly below key(y); recursing on
    // them is well-founded.  The last output carries key(y) and, with the
    // prefix now maximal below key(y), lands without further exchanges.
    for (size_t i = 0; i + 1 < z.size(); ++i) insert_term(canon, z[i], trace);
    x = z.back();
  }
}

}  // namespace detail

/**
 * Canonicalize an arbitrary mixed word by exchange-law insertion.  Returns
 * the unique canonical form of the product; optionally records every rewrite
 * step into @p trace.
 */
inline DnOgsForm normalize_mixed_word(const MixedWord& word,
                                      TraceSink* trace = nullptr) {
  std::vector<Term> canon;
  for (const MixedLetter& l : word.letters)
    for (const Term& t : detail::letter_terms(l))
      detail::insert_term(canon, t, trace);
  return form_from_terms(TermSequence{word.n, canon});
}

}  // namespace dncox
