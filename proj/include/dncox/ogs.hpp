#pragma once

/**
 * @file ogs.hpp
 * @brief Canonical product-of-powers forms for S_n and D_n elements.
 *
 * Every permutation of S_n is uniquely t_2^{i_2}·t_3^{i_3}···t_n^{i_n}
 * with 0 ≤ i_k < k, and every element of D_n is uniquely
 * w_1^{j_1}·t_2^{i_2}·w_2^{j_2}···w_{n−1}^{j_{n−1}}·t_n^{i_n} with
 * j_k ∈ {0,1}.  This header converts between these exponent forms and
 * concrete signed permutations, in both directions.
 */

#include <string>
#include <vector>

#include "dncox/signed_permutation.hpp"

namespace dncox {

struct SnOgsForm {
  int n;
  std::vector<int> t_exp;  ///< t_exp[k-2] = i_k for k = 2..n

  explicit SnOgsForm(int n_) : n(n_), t_exp(static_cast<size_t>(n_ - 1), 0) {}

  int& i(int k) { return t_exp[static_cast<size_t>(k - 2)]; }
  int i(int k) const { return t_exp[static_cast<size_t>(k - 2)]; }

  void validate() const {
    if (static_cast<int>(t_exp.size()) != n - 1)
      throw domain_error("malformed form");
    for (int k = 2; k <= n; ++k)
      if (i(k) < 0 || i(k) >= k) throw domain_error("t-exponent out of range");
  }

  bool operator==(const SnOgsForm& o) const {
    return n == o.n && t_exp == o.t_exp;
  }
};

struct DnOgsForm {
  int n;
  std::vector<int> w_exp;  ///< w_exp[L-1] = j_L ∈ {0,1} for L = 1..n−1
  std::vector<int> t_exp;  ///< t_exp[k-2] = i_k for k = 2..n

  explicit DnOgsForm(int n_)
      : n(n_),
        w_exp(static_cast<size_t>(n_ - 1), 0),
        t_exp(static_cast<size_t>(n_ - 1), 0) {}

  int& i(int k) { return t_exp[static_cast<size_t>(k - 2)]; }
  int i(int k) const { return t_exp[static_cast<size_t>(k - 2)]; }
  int& j(int L) { return w_exp[static_cast<size_t>(L - 1)]; }
  int j(int L) const { return w_exp[static_cast<size_t>(L - 1)]; }

  void validate() const {
    if (static_cast<int>(t_exp.size()) != n - 1 ||
        static_cast<int>(w_exp.size()) != n - 1)
      throw domain_error("malformed form");
    for (int k = 2; k <= n; ++k)
      if (i(k) < 0 || i(k) >= k) throw domain_error("t-exponent out of range");
    for (int L = 1; L < n; ++L)
      if (j(L) < 0 || j(L) > 1) throw domain_error("w-exponent out of range");
  }

  bool operator==(const DnOgsForm& o) const {
    return n == o.n && w_exp == o.w_exp && t_exp == o.t_exp;
  }

  /// The unsigned part: the S_n form with the same t-exponents.
  SnOgsForm phi_form() const {
    SnOgsForm f(n);
    f.t_exp = t_exp;
    return f;
  }
};

/// One nonzero term of a canonical form.
struct Term {
  enum class Kind : uint8_t { T, W };
  Kind kind;
  int index;
  int exp;  ///< always 1 for W terms

  static Term t(int k, int e) { return {Kind::T, k, e}; }
  static Term w(int L) { return {Kind::W, L, 1}; }

  /// Canonical interleaved position: ... t_k < w_k < t_{k+1} ...
  int order_key() const {
    return kind == Kind::T ? 2 * index : 2 * index + 1;
  }

  bool operator==(const Term& o) const {
    return kind == o.kind && index == o.index && exp == o.exp;
  }
};

struct TermSequence {
  int n;
  std::vector<Term> terms;
};

// ---------------------------------------------------------------------------
// Realization (form -> permutation).
// ---------------------------------------------------------------------------

inline SignedPermutation realize_sn(const SnOgsForm& form) {
  form.validate();
  SignedPermutation acc(form.n);
  for (int k = 2; k <= form.n; ++k) {
    SignedPermutation t = t_generator(k, form.n);
    for (int r = 0; r < form.i(k); ++r) acc = compose(acc, t);
  }
  return acc;
}

inline SignedPermutation realize_dn(const DnOgsForm& form) {
  form.validate();
  SignedPermutation acc(form.n);
  for (int k = 1; k <= form.n; ++k) {
    if (k >= 2 && form.i(k) > 0) {
      SignedPermutation t = t_generator(k, form.n);
      for (int r = 0; r < form.i(k); ++r) acc = compose(acc, t);
    }
    if (k < form.n && form.j(k) == 1)
      acc = compose(acc, w_generator(k, form.n));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Extraction (permutation -> form).
// ---------------------------------------------------------------------------

/// S_n canonical exponents by peeling t_m^{i_m} from position m downward.
inline SnOgsForm extract_sn_ogs(const SignedPermutation& a) {
  if (!all_positive(a)) throw domain_error("extract_sn_ogs: negative image");
  SnOgsForm form(a.n());
  SignedPermutation res = a;
  for (int m = a.n(); m >= 2; --m) {
    // res = x · t_m^{i_m} with x fixing positions m..n; then i_m = m − res(m).
    int im = m - res(m);
    form.i(m) = im;
    if (im > 0) {
      SignedPermutation t = t_generator(m, a.n());
      SignedPermutation t_inv_pow(a.n());
      for (int r = 0; r < m - im; ++r) t_inv_pow = compose(t_inv_pow, t);
      res = compose(res, t_inv_pow);  // t_m^{m−i_m} = t_m^{−i_m}
    }
  }
  return form;
}

/**
 * D_n canonical exponents by right-coset peeling from position n downward:
 * the residual image of m decides j_{m−1} (its sign) and i_m (its distance
 * from m); the coset representative w_{m−1}^{j_{m−1}}·t_m^{i_m} is then
 * stripped and the rank drops by one.
 */
inline DnOgsForm extract_dn_ogs(const SignedPermutation& a) {
  if (!is_d_element(a))
    throw domain_error("extract_dn_ogs: odd number of negative images");
  DnOgsForm form(a.n());
  SignedPermutation res = a;
  for (int m = a.n(); m >= 2; --m) {
    int v = res(m);
    int jm1 = v < 0 ? 1 : 0;
    int im = m - std::abs(v);
    form.i(m) = im;
    form.j(m - 1) = jm1;
    MixedWord rep{a.n(), {}};
    if (jm1) rep.letters.push_back(MixedLetter::w(m - 1));
    if (im > 0) rep.letters.push_back(MixedLetter::t(m, im));
    res = compose(res, inverse(evaluate_word(rep)));
  }
  if (!res.is_identity())
    throw domain_error("extract_dn_ogs: peeling failed");  // unreachable
  return form;
}

// ---------------------------------------------------------------------------
// Support terms and text rendering.
// ---------------------------------------------------------------------------

inline TermSequence support_terms(const DnOgsForm& form) {
  form.validate();
  TermSequence seq{form.n, {}};
  for (int k = 1; k <= form.n; ++k) {
    if (k >= 2 && form.i(k) > 0) seq.terms.push_back(Term::t(k, form.i(k)));
    if (k < form.n && form.j(k) == 1) seq.terms.push_back(Term::w(k));
  }
  return seq;
}

inline TermSequence support_terms(const SnOgsForm& form) {
  form.validate();
  TermSequence seq{form.n, {}};
  for (int k = 2; k <= form.n; ++k)
    if (form.i(k) > 0) seq.terms.push_back(Term::t(k, form.i(k)));
  return seq;
}

inline DnOgsForm form_from_terms(const TermSequence& seq) {
  DnOgsForm form(seq.n);
  int last_key = 0;
  for (const Term& t : seq.terms) {
    if (t.order_key() <= last_key)
      throw domain_error("terms out of canonical order");
    last_key = t.order_key();
    if (t.kind == Term::Kind::T)
      form.i(t.index) = t.exp;
    else
      form.j(t.index) = 1;
  }
  form.validate();
  return form;
}

inline std::string term_to_string(const Term& t) {
  if (t.kind == Term::Kind::W) return "w" + std::to_string(t.index);
  return t.exp == 1 ? "t" + std::to_string(t.index)
                    : "t" + std::to_string(t.index) + "^" +
                          std::to_string(t.exp);
}

inline std::string terms_to_string(const std::vector<Term>& terms) {
  if (terms.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) s += '*';
    s += term_to_string(terms[i]);
  }
  return s;
}

/// `w1*t2*t3^2*w3*t4` rendering; identity renders as `e`.
inline std::string form_to_string(const DnOgsForm& form) {
  return terms_to_string(support_terms(form).terms);
}

inline std::string form_to_string(const SnOgsForm& form) {
  return terms_to_string(support_terms(form).terms);
}

/// The canonical form as a word, for evaluation or printing.
inline MixedWord form_to_word(const DnOgsForm& form) {
  MixedWord w{form.n, {}};
  for (const Term& t : support_terms(form).terms)
    w.letters.push_back(t.kind == Term::Kind::T
                            ? MixedLetter::t(t.index, t.exp)
                            : MixedLetter::w(t.index));
  return w;
}

}  // namespace dncox
