/**
 * @file dncox_cli.cpp
 * @brief Command-line surface for the D_n canonical-form library.
 *
 * Commands: canon, mul, len, factorize, decompose, perm, form, normform,
 * verify.  Exit codes: 0 ok, 1 domain error, 2 parse error, 3 verification
 * failure.
 */

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dncox/decomposition.hpp"
#include "dncox/exchange.hpp"
#include "dncox/factorization.hpp"
#include "dncox/ogs.hpp"
#include "dncox/subgroups.hpp"
#include "dncox/verify.hpp"
#include "dncox/wordlang.hpp"

using nlohmann::json;
using namespace dncox;

namespace {

struct Options {
  int n = 0;
  bool as_json = false;
  bool trace = false;
};

void print_trace(const TraceSink& trace, bool as_json) {
  for (const TraceRecord& t : trace) {
    if (as_json) {
      json j{{"rule", t.rule}, {"before", t.before}, {"after", t.after}};
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "# " << t.rule << ": " << t.before << " -> " << t.after
                << "\n";
    }
  }
}

DnOgsForm form_of_payload(const std::string& payload, int n) {
  if (!payload.empty() && payload.front() == '[')
    return extract_dn_ogs(parse_permutation(payload));
  return extract_dn_ogs(evaluate_word(parse_word(payload, n)));
}

json factor_json(const TermList& f) {
  json terms = json::array();
  for (auto& [k, i] : f) terms.push_back({{"t", k}, {"exp", i}});
  return terms;
}

int run(int argc, char** argv) {
  CLI::App app{"Canonical forms, exchange rewriting, factorization and "
               "Coxeter length for the even-signed permutation groups D_n"};
  app.require_subcommand(1);
  Options opt;

  std::string word1, word2, suite;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "rank")->required();
    cmd->add_flag("--json", opt.as_json, "JSON output");
    cmd->add_flag("--trace", opt.trace, "print rewrite derivations to stderr");
  };

  CLI::App* canon = app.add_subcommand("canon", "canonical form of a word");
  add_common(canon);
  canon->add_option("word", word1)->required();

  CLI::App* mul = app.add_subcommand("mul", "canonical form of a product");
  add_common(mul);
  mul->add_option("word1", word1)->required();
  mul->add_option("word2", word2)->required();

  CLI::App* len = app.add_subcommand("len", "Coxeter length");
  add_common(len);
  len->add_option("word", word1)->required();

  CLI::App* fac = app.add_subcommand("factorize", "elementary factorization");
  add_common(fac);
  fac->add_option("form", word1)->required();

  CLI::App* dec = app.add_subcommand("decompose", "bullet/circle decomposition");
  add_common(dec);
  dec->add_option("form", word1)->required();

  CLI::App* perm = app.add_subcommand("perm", "one-line permutation of a form");
  add_common(perm);
  perm->add_option("form", word1)->required();

  CLI::App* formc = app.add_subcommand("form", "canonical form of a permutation");
  add_common(formc);
  formc->add_option("perm", word1)->required();

  CLI::App* norm = app.add_subcommand("normform", "reduced normal-form word");
  add_common(norm);
  norm->add_option("form", word1)->required();

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver);
  ver->add_option("--suite", suite, "bijection|exchange-laws|length|decomposition|subgroups")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (canon->parsed() || mul->parsed()) {
    MixedWord w = parse_word(word1, opt.n);
    if (mul->parsed()) {
      MixedWord w2 = parse_word(word2, opt.n);
      w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
    }
    TraceSink trace;
    DnOgsForm form = normalize_mixed_word(w, opt.trace ? &trace : nullptr);
    if (opt.trace) print_trace(trace, opt.as_json);
    if (opt.as_json)
      std::cout << json{{"form", form_to_string(form)}}.dump() << "\n";
    else
      std::cout << form_to_string(form) << "\n";
    return 0;
  }
  if (len->parsed()) {
    int l = dn_length(form_of_payload(word1, opt.n));
    if (opt.as_json)
      std::cout << json{{"length", l}}.dump() << "\n";
    else
      std::cout << l << "\n";
    return 0;
  }
  if (fac->parsed()) {
    DnOgsForm form = form_of_payload(word1, opt.n);
    ElementaryFactorization f = factorize_elementary(form.phi_form());
    if (opt.as_json) {
      json factors = json::array();
      for (const TermList& fl : f.factors) factors.push_back(factor_json(fl));
      std::cout << json{{"factors", factors}}.dump() << "\n";
    } else {
      if (f.factors.empty()) {
        std::cout << "e\n";
      } else {
        for (size_t v = 0; v < f.factors.size(); ++v) {
          if (v) std::cout << " | ";
          std::vector<Term> ts;
          for (auto& [k, i] : f.factors[v]) ts.push_back(Term::t(k, i));
          std::cout << terms_to_string(ts);
        }
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (dec->parsed()) {
    DnOgsForm form = form_of_payload(word1, opt.n);
    BulletCircleDecomposition d = bullet_circle_decompose(form);
    if (opt.as_json) {
      json factors = json::array();
      for (const BlockedFactor& bf : blocked_factors(form))
        factors.push_back({{"bullet", bf.w_list},
                           {"circle", factor_json(bf.circle)}});
      json j;
      j["bullet"] = d.w_indices;
      j["circle"] = form_to_string(d.circle);
      j["length"] = dn_length(form);
      j["factors"] = factors;
      std::cout << j.dump() << "\n";
    } else {
      std::vector<Term> ws;
      for (int L : d.w_indices) ws.push_back(Term::w(L));
      std::cout << "bullet: " << terms_to_string(ws) << "\n"
                << "circle: " << form_to_string(d.circle) << "\n";
    }
    return 0;
  }
  if (perm->parsed()) {
    SignedPermutation p = realize_dn(form_of_payload(word1, opt.n));
    if (opt.as_json)
      std::cout << json{{"perm", p.to_string()}}.dump() << "\n";
    else
      std::cout << p.to_string() << "\n";
    return 0;
  }
  if (formc->parsed()) {
    DnOgsForm form = extract_dn_ogs(parse_permutation(word1));
    if (opt.as_json)
      std::cout << json{{"form", form_to_string(form)}}.dump() << "\n";
    else
      std::cout << form_to_string(form) << "\n";
    return 0;
  }
  if (norm->parsed()) {
    DnOgsForm form = form_of_payload(word1, opt.n);
    auto blocks = dn_normal_blocks(form);
    if (opt.as_json)
      std::cout << json{{"normform", blocks_to_string(blocks)},
                        {"length", dn_length(form)}}
                       .dump()
                << "\n";
    else
      std::cout << blocks_to_string(blocks) << "\n";
    return 0;
  }
  if (ver->parsed()) {
    VerifyReport r = verify_suite(opt.n, suite);
    json j{{"suite", r.suite},
           {"n", r.n},
           {"checked", r.checked},
           {"failures", r.failures}};
    std::cout << j.dump() << "\n";
    return r.ok() ? 0 : 3;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
