// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "species/cli.hpp"
#include "species/errors.hpp"
#include "species/expr.hpp"
#include "species/interpolation.hpp"
#include "species/morphisms.hpp"
#include "species/substitution.hpp"
#include "species/verify.hpp"
#include "species/zoo.hpp"

using namespace species;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void expect(const Report& r) { expect(r.passed, r.to_text()); }
};

LabelSet ls(const std::string& s) { return LabelSet::parse(s); }
Label blk(const std::string& s) { return ls(s).as_block_label(); }
Term g(const std::string& v, std::vector<LabelPair> e = {}) { return Term::graph(ls(v), std::move(e)); }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
};
Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. the two coproducts in 𝒯(G₊)
Outcome worked_example() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Tee t = build_tee(hopf_L(), positive_part(hopf_G()));
  Term x = Term::composite(Term::order({blk("d"), blk("b"), blk("a,c,e")}),
                           {g("a,c,e", {{Label("c"), Label("e")}}), g("b"), g("d")});
  Term l1 = Term::composite(Term::order({blk("d"), blk("c,e")}),
                            {g("c,e", {{Label("c"), Label("e")}}), g("d")});
  Term r1 = Term::composite(Term::order({blk("b"), blk("a")}), {g("a"), g("b")});
  Term l2 = Term::composite(Term::order({blk("d"), blk("b"), blk("e")}), {g("b"), g("d"), g("e")});
  Term r2 = Term::composite(Term::order({blk("a,c")}), {g("a,c")});
  o.expect(t.hopf.delta(x, ls("c,d,e"), ls("a,b")) == Vec2(Tensor{l1, r1}), "split cde|ab");
  o.expect(t.hopf.delta(x, ls("b,d,e"), ls("a,c")) == Vec2(Tensor{l2, r2}), "split bed|ac");
  double secs = seconds_since(t0);
  o.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

// 2. axioms at |I| ≤ 4
Outcome axiom_suites() {
  Outcome o;
  std::vector<Bimonoid> hs{hopf_L(), hopf_E(), hopf_G(), hopf_Poset(),
                           build_tee(hopf_L(), positive_part(hopf_G())).hopf,
                           build_tee(hopf_G(), positive_part(hopf_L())).hopf,
                           build_tee(hopf_E(), positive_part(hopf_E())).hopf,
                           build_tee(hopf_Poset(), positive_part(hopf_E())).hopf};
  for (const Bimonoid& h : hs) {
    o.expect(check_associativity(h.monoid(), 4));
    o.expect(check_coassociativity(h.comonoid(), 4));
    o.expect(check_compatibility(h, 4));
    o.expect(check_antipode(h, 4));
  }
  return o;
}

std::vector<std::size_t> bell_numbers(std::size_t n) {
  std::vector<std::size_t> bell{1}, row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

// Reflexive transitive relations on an n-set, by brute force.
std::size_t count_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) r[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
    count += ok;
  }
  return count;
}

// 3. dimension oracles
Outcome dimension_oracles() {
  Outcome o;
  o.expect(hopf_G().species.dim(3) == 8, "dim G[3]");
  o.expect(evaluate("G o L+").species.dim(3) == 26, "dim (G o L+)[3]");
  o.expect(evaluate("L o G+").species.dim(3) == 26, "dim (L o G+)[3]");
  Species pi = evaluate("T[E](E+)").species;
  auto bell = bell_numbers(5);
  for (std::size_t n = 0; n <= 5; ++n)
    o.expect(pi.dim(n) == bell[n], "Bell(" + std::to_string(n) + ")");
  std::size_t preorders = count_preorders(3);
  o.expect(preorders == 29, "preorder oracle");
  o.expect(evaluate("T[Pos](E+)").species.dim(3) == preorders, "dim T[Pos](E+)[3]");
  return o;
}

// 4. the restriction identity on the zoo, and refusal of a non-cocommutative b
Outcome cocommutativity_necessity() {
  Outcome o;
  for (const Bimonoid* h : {&hopf_E(), &hopf_L(), &hopf_G(), &hopf_Poset()})
    o.expect(check_restriction_identity(*h, 4));
  try {
    build_tee(twisted_L(), positive_part(hopf_E()));
    o.expect(false, "Ltw accepted");
  } catch (const HypothesisError& e) {
    o.expect(e.hypothesis() == "cocommutative", "refused for " + e.hypothesis());
  }
  return o;
}

// 5. morphism certificates
Outcome morphisms() {
  Outcome o;
  Tee gl = build_tee(hopf_G(), positive_part(hopf_L()));
  Tee ee = build_tee(hopf_E(), positive_part(hopf_E()));
  SpeciesMap f = f_tau_theta(gl, ee, tau_GE(), forget_order(), 4);
  o.expect(check_bimonoid_morphism(f, gl.hopf, ee.hopf, 4));
  TeeMorphism ab = abelianization(positive_part(hopf_G()), 4);
  o.expect(check_bimonoid_morphism(ab.map, ab.source.hopf, ab.target.hopf, 4));
  for (const Bimonoid* b : {&hopf_E(), &hopf_L()})
    o.expect(check_assoc_iso(assoc_iso(*b, positive_part(hopf_E()), positive_part(hopf_E())), 3));
  Tee lg = build_tee(hopf_L(), positive_part(hopf_G()));
  o.expect(check_embed_p(lg, 4));
  o.expect(check_embed_b(gl, 4));
  PosetSplittings ps = poset_splittings(3);
  o.expect(check_splitting(ps, ps.via_alpha, 3));
  o.expect(check_splitting(ps, ps.via_lambda, 3));
  Report lam = check_restriction_morphism(lambda(), *hopf_E().restriction,
                                          *hopf_Poset().restriction, 4);
  o.expect(!lam.passed, "lambda passed the restriction check");
  return o;
}

// 6. the interpolation family for (G, E, L₊, cyc, τ_GE, θ_Lcyc)
Outcome interpolation() {
  Outcome o;
  InterpolationData data = flagship_G_E_L_cyc();
  std::vector<RTee> rts;
  for (std::size_t r = 1; r <= 4; ++r) rts.push_back(build_rtee(r, data));
  for (std::size_t i = 0; i < 3; ++i) {
    o.expect(check_ideal(rts[i], 3));
    o.expect(check_coideal(rts[i], 3));
    o.expect(check_quotient_dims(rts[i], 4));
    o.expect(check_port_identities(rts[i], rts[i + 1], 4));
    if (i + 2 < rts.size()) o.expect(check_port_identities(rts[i], rts[i + 2], 4));
  }
  o.expect(check_collapses(data, 4));
  return o;
}

// 7. antipode closed forms on E and L
Outcome antipode_closed_forms() {
  Outcome o;
  AntipodeSolver se(hopf_E()), sl(hopf_L());
  for (std::size_t n = 0; n <= 5; ++n) {
    LabelSet i = canonical_labels(n);
    Rational sign = n % 2 ? -1 : 1;
    o.expect(se(Term::star(i)) == Vec(Term::star(i), sign), "s on E, n=" + std::to_string(n));
    for (const Term& l : hopf_L().species.basis(i)) {
      auto rev = l.sequence();
      std::reverse(rev.begin(), rev.end());
      o.expect(sl(l) == Vec(Term::order(rev), sign), "s on L at " + l.to_string());
    }
  }
  return o;
}

// 8. command-line contract
Outcome cli_contract() {
  Outcome o;
  for (const char* e : {"G", "T[L](G+)", "T[G](L+)", "E . cyc", "R{2}[G,E](L+,cyc)"}) {
    Run r = cli({"enumerate", "-e", e, "-s", "a,b,c", "--json"});
    o.expect(r.code == kPass, std::string("enumerate ") + e);
    Shape sh = evaluate(e).species.shape();
    for (const auto& j : Json::parse(r.out))
      o.expect(encode(decode_term(j, sh)).dump() == j.dump(), "round trip " + j.dump());
  }
  std::string t = golden("worked_term.json");
  t.pop_back();
  for (auto [split, name] : {std::pair{"c,d,e", "delta_cde_ab"}, std::pair{"b,e,d", "delta_bed_ac"}}) {
    o.expect(cli({"delta", "-e", "T[L](G+)", "-t", t, "--split", split}).out ==
                 golden(std::string(name) + ".txt"),
             std::string("golden ") + name);
    o.expect(cli({"delta", "-e", "T[L](G+)", "-t", t, "--split", split, "--json"}).out ==
                 golden(std::string(name) + ".json"),
             std::string("golden ") + name + ".json");
  }
  std::vector<std::array<std::string, 3>> dims{{"G", "3", "dim_G.json"},
                                               {"G o L+", "3", "dim_G_o_L+.json"},
                                               {"L o G+", "3", "dim_L_o_G+.json"},
                                               {"T[E](E+)", "5", "dim_T_E_E+.json"},
                                               {"T[Pos](E+)", "3", "dim_T_Pos_E+.json"}};
  for (const auto& [e, n, file] : dims)
    o.expect(cli({"dim", "-e", e, "-n", n, "--json"}).out == golden(file), "golden " + file);
  o.expect(cli({"verify", "-e", "T[G](L+)", "-l", "compat", "-n", "3"}).code == kPass, "exit 0");
  o.expect(cli({"verify", "-e", "L", "-l", "assoc", "-n", "3", "--inject-fault", "mu"}).code ==
               kViolated,
           "exit 1");
  o.expect(cli({"dim", "-e", "L o G"}).code == kUsage, "exit 2 (semantic)");
  o.expect(cli({"dim", "-e", "E . ("}).code == kUsage, "exit 2 (parse)");
  o.expect(cli({"frobnicate"}).code == kUsage, "exit 2 (usage)");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example in T(G+)", worked_example},
      {"axiom suites at n<=4", axiom_suites},
      {"dimension oracles", dimension_oracles},
      {"restriction identity and refusal", cocommutativity_necessity},
      {"morphism certificates", morphisms},
      {"interpolation family r=1,2,3", interpolation},
      {"antipode closed forms n<=5", antipode_closed_forms},
      {"CLI contract", cli_contract},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::printf("%s criterion %zu: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), seconds_since(t0));
    for (const auto& f : o.failures) std::printf("  %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
