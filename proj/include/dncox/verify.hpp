#pragma once

/**
 * @file verify.hpp
 * @brief Named exhaustive verification suites over small ranks.
 *
 * Each suite replays one family of structural claims against an independent
 * oracle (enumeration, BFS distances, or direct permutation arithmetic) and
 * reports the first counterexamples if any.  These back the CLI `verify`
 * command and the acceptance harness.
 */

#include <functional>
#include <string>
#include <vector>

#include "dncox/decomposition.hpp"
#include "dncox/exchange.hpp"
#include "dncox/factorization.hpp"
#include "dncox/ogs.hpp"
#include "dncox/subgroups.hpp"

namespace dncox {

struct VerifyReport {
  std::string suite;
  int n = 0;
  long checked = 0;
  std::vector<std::string> failures;  ///< capped at a handful of entries

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline void fail(VerifyReport& r, const std::string& msg) {
  if (r.failures.size() < 5) r.failures.push_back(msg);
}

inline void verify_bijection(VerifyReport& r, int n) {
  std::set<SignedPermutation> seen;
  DnOgsForm form(n);
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      ++r.checked;
      SignedPermutation p = realize_dn(form);
      if (!is_d_element(p)) fail(r, form_to_string(form) + ": not in D_n");
      if (!seen.insert(p).second)
        fail(r, form_to_string(form) + ": duplicate element " + p.to_string());
      if (!(extract_dn_ogs(p) == form))
        fail(r, form_to_string(form) + ": round trip mismatch");
      return;
    }
    // Sweep (j_{k−1}, i_k) together; over k = 2..n this covers every
    // exponent tuple exactly once.
    for (int i = 0; i < k; ++i) {
      form.i(k) = i;
      for (int j = 0; j <= 1; ++j) {
        form.j(k - 1) = j;
        rec(k + 1);
      }
      form.j(k - 1) = 0;
      form.i(k) = 0;
    }
  };
  rec(2);
  long expected = 1;
  for (int k = 2; k <= n; ++k) expected *= 2 * k;  // = 2^{n−1}·n!
  if (r.checked != expected || static_cast<long>(seen.size()) != expected)
    fail(r, "element count mismatch: got " + std::to_string(seen.size()) +
                ", expected " + std::to_string(expected));
}

inline void verify_exchange_laws(VerifyReport& r, int n) {
  auto eval_terms = [&](const std::vector<Term>& ts) {
    MixedWord w{n, {}};
    for (const Term& t : ts)
      w.letters.push_back(t.kind == Term::Kind::T
                              ? MixedLetter::t(t.index, t.exp)
                              : MixedLetter::w(t.index));
    return evaluate_word(w);
  };
  // t·t exchange
  for (int q = 3; q <= n; ++q)
    for (int p = 2; p < q; ++p)
      for (int iq = 1; iq < q; ++iq)
        for (int ip = 1; ip < p; ++ip) {
          ++r.checked;
          auto lhs = eval_terms({Term::t(q, iq), Term::t(p, ip)});
          auto rhs = eval_terms(exchange_tt(q, iq, p, ip));
          if (!(lhs == rhs))
            fail(r, "tt(" + std::to_string(q) + "," + std::to_string(iq) +
                        "," + std::to_string(p) + "," + std::to_string(ip) +
                        ") unsound");
        }
  // t·w exchange
  for (int q = 2; q <= n; ++q)
    for (int p = 1; p < q && p <= n - 1; ++p)
      for (int iq = 1; iq < q; ++iq) {
        ++r.checked;
        auto lhs = eval_terms({Term::t(q, iq), Term::w(p)});
        auto rhs = eval_terms(exchange_tw(q, iq, p));
        if (!(lhs == rhs))
          fail(r, "tw(" + std::to_string(q) + "," + std::to_string(iq) + "," +
                      std::to_string(p) + ") unsound");
      }
  // w·t exchange
  for (int q = 2; q <= n - 1; ++q)
    for (int p = 2; p <= q; ++p)
      for (int ip = 1; ip < p; ++ip) {
        ++r.checked;
        auto lhs = eval_terms({Term::w(q), Term::t(p, ip)});
        auto rhs = eval_terms(exchange_wt(q, p, ip));
        if (!(lhs == rhs))
          fail(r, "wt(" + std::to_string(q) + "," + std::to_string(p) + "," +
                      std::to_string(ip) + ") unsound");
      }
  // w·w commutation and w² = 1
  for (int q = 1; q <= n - 1; ++q)
    for (int p = 1; p <= n - 1; ++p) {
      ++r.checked;
      auto lhs = eval_terms({Term::w(q), Term::w(p)});
      auto rhs = p == q ? SignedPermutation(n)
                        : eval_terms({Term::w(p), Term::w(q)});
      if (!(lhs == rhs)) fail(r, "ww(" + std::to_string(q) + "," +
                                     std::to_string(p) + ") unsound");
    }
}

inline void verify_length(VerifyReport& r, int n) {
  LengthTable table = bfs_length_table(n);
  for (const SignedPermutation& p : enumerate_dn(n)) {
    ++r.checked;
    int got = dn_length(extract_dn_ogs(p));
    int want = table.at(p);
    if (got != want)
      fail(r, p.to_string() + ": dn_length " + std::to_string(got) +
                  " != BFS " + std::to_string(want));
  }
}

inline void verify_decomposition(VerifyReport& r, int n) {
  for (const SignedPermutation& p : enumerate_dn(n)) {
    ++r.checked;
    DnOgsForm form = extract_dn_ogs(p);
    BulletCircleDecomposition d = bullet_circle_decompose(form);
    SignedPermutation bullet(n);
    for (int L : d.w_indices) bullet = compose(bullet, w_generator(L, n));
    SignedPermutation prod = compose(bullet, realize_sn(d.circle));
    if (!(prod == p)) fail(r, p.to_string() + ": bullet*circle mismatch");
    if (!(phi(bullet) == SignedPermutation(n)))
      fail(r, p.to_string() + ": bullet part not sign-only");
    if (!(d.circle == extract_sn_ogs(phi(p))))
      fail(r, p.to_string() + ": circle differs from unsigned part");
  }
}

inline void verify_subgroups(VerifyReport& r, int n) {
  // S°_{n'} closure vs form-level membership test.
  std::vector<SignedPermutation> gens{s_prime_generator(n)};
  for (int i = 2; i < n; ++i) gens.push_back(s_generator(i, n));
  std::set<SignedPermutation> closure = subgroup_closure(gens, 50000);
  long fac = 1;
  for (int k = 2; k <= n; ++k) fac *= k;
  if (static_cast<long>(closure.size()) != fac)
    fail(r, "S'_n closure has order " + std::to_string(closure.size()) +
                ", expected " + std::to_string(fac));
  for (const SignedPermutation& p : enumerate_dn(n)) {
    ++r.checked;
    bool got = is_in_s_prime(extract_dn_ogs(p));
    bool want = closure.count(p) > 0;
    if (got != want)
      fail(r, p.to_string() + ": s-prime membership mismatch");
  }
  // Id• structure.
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    SignedPermutation p(n);
    for (int L = 1; L < n; ++L)
      if (mask & (1u << (L - 1))) p = compose(p, w_generator(L, n));
    ++r.checked;
    if (!compose(p, p).is_identity()) fail(r, "Id-bullet element not involutive");
    SignedPermutation q(n);
    for (int L : id_bullet_from_negations(p)) q = compose(q, w_generator(L, n));
    if (!(q == p)) fail(r, "id_bullet_from_negations mismatch");
  }
  // B_m chain.
  for (int m = 1; m < n; ++m) {
    auto bm = bm_subgroup_elements(m, n);
    long order = 1;
    for (int k = 1; k <= m; ++k) order *= 2 * k;
    ++r.checked;
    if (static_cast<long>(bm.size()) != order)
      fail(r, "B_" + std::to_string(m) + " order " +
                  std::to_string(bm.size()) + ", expected " +
                  std::to_string(order));
    for (const SignedPermutation& a : bm)
      for (const SignedPermutation& b : bm)
        if (!bm.count(compose(a, b))) {
          fail(r, "B_" + std::to_string(m) + " not closed");
          break;
        }
  }
}

}  // namespace detail

/// Run one named suite: bijection | exchange-laws | length | decomposition |
/// subgroups.
inline VerifyReport verify_suite(int n, const std::string& suite) {
  VerifyReport r{suite, n, 0, {}};
  if (suite == "bijection")
    detail::verify_bijection(r, n);
  else if (suite == "exchange-laws")
    detail::verify_exchange_laws(r, n);
  else if (suite == "length")
    detail::verify_length(r, n);
  else if (suite == "decomposition")
    detail::verify_decomposition(r, n);
  else if (suite == "subgroups")
    detail::verify_subgroups(r, n);
  else
    throw domain_error("unknown suite: " + suite);
  return r;
}

}  // namespace dncox
