#include <doctest.h>

#include <fstream>
#include <sstream>

#include "species/errors.hpp"
#include "species/interpolation.hpp"
#include "species/zoo.hpp"

using namespace species;

namespace {

LabelSet ls(const std::string& s) { return LabelSet::parse(s); }
Label blk(const std::string& s) { return ls(s).as_block_label(); }
std::vector<Label> seq(const std::string& s) {
  std::vector<Label> out;
  for (char c : s) out.emplace_back(std::string(1, c));
  return out;
}

const std::vector<RTee>& flagship_family() {
  static const std::vector<RTee> rts = [] {
    std::vector<RTee> out;
    InterpolationData data = flagship_G_E_L_cyc();
    for (std::size_t r = 1; r <= 4; ++r) out.push_back(build_rtee(r, data));
    return out;
  }();
  return rts;
}

// Thirteen labels, seven blocks, a graph on the blocks.
Term thirteen_label_term() {
  std::vector<std::string> blocks{"a", "cb", "ed", "y", "hi", "jfk", "xm"};
  std::vector<Term> inners;
  std::vector<Label> block_labels;
  for (const auto& b : blocks) {
    inners.push_back(Term::order(seq(b)));
    block_labels.push_back(inners.back().ground().as_block_label());
  }
  auto B = [&](const std::string& b) { return Term::order(seq(b)).ground().as_block_label(); };
  std::vector<LabelPair> edges{{B("y"), B("a")},    {B("a"), B("cb")},   {B("xm"), B("jfk")},
                               {B("hi"), B("ed")},  {B("ed"), B("jfk")}, {B("jfk"), B("hi")}};
  return Term::composite(Term::graph(LabelSet(block_labels), edges), inners);
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("the flagship family at r = 1, 2, 3") {
  const auto& rts = flagship_family();
  for (std::size_t i = 0; i < 3; ++i) {
    const RTee& rt = rts[i];
    INFO("r=" << rt.r);
    CHECK(check_ideal(rt, 3).passed);
    CHECK(check_coideal(rt, 3).passed);
    CHECK(check_quotient_dims(rt, 4).passed);
    CHECK(check_confluence(rt, 3).passed);
    CHECK(check_quotient_hopf(rt, 3).passed);
    CHECK(check_port_morphisms(rt, 3).passed);
    CHECK(check_port_identities(rt, rts[i + 1], 4).passed);
    CHECK(check_port_between(rt, rts[i + 1], 3).passed);
    CHECK(check_hat_f_is_f(rt, 3).passed);
  }
  CHECK(check_collapses(flagship_G_E_L_cyc(), 3).passed);
}

TEST_CASE("quotient dimensions") {
  const auto& rts = flagship_family();
  std::vector<std::size_t> carrier2{1, 1, 3, 13, 85}, carrier3{1, 1, 2, 10, 58};
  auto rows2 = quotient_dims(rts[1], 4);
  auto rows3 = quotient_dims(rts[2], 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(rows2[n].carrier == carrier2[n]);
    CHECK(rows3[n].carrier == carrier3[n]);
    CHECK(rows2[n].ambient - rows2[n].generators_rank == rows2[n].carrier);
    CHECK(rts[1].quotient.species.dim(n) == carrier2[n]);
  }
  CHECK(rows2[4].ambient == 389);
}

TEST_CASE("the second flagship") {
  InterpolationData data = flagship_L_E_G_E();
  RTee r2 = build_rtee(2, data);
  RTee r3 = build_rtee(3, data);
  CHECK(check_ideal(r2, 3).passed);
  CHECK(check_coideal(r2, 3).passed);
  CHECK(check_quotient_dims(r2, 4).passed);
  CHECK(check_port_identities(r2, r3, 3).passed);
  CHECK(check_surjectivity_transfer(r2, 3).passed);
}

TEST_CASE("an ideal generator at r = 2") {
  const RTee& rt = flagship_family()[1];
  auto gens = ideal_generators(rt, ls("a,b"));
  // ambient terms on {a,b} with a singleton block in the upper coordinate
  CHECK_FALSE(gens.empty());
  for (const Vec& g : gens) {
    CHECK(g.size() == 2);
    for (const auto& [t, c] : g) CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("refusals") {
  InterpolationData data = flagship_G_E_L_cyc();
  CHECK_THROWS_AS(build_rtee(0, data), PreconditionError);
  const auto& rts = flagship_family();
  CHECK_THROWS_AS(port_between(rts[2], rts[1]), PreconditionError);
  CHECK_THROWS_AS(port_between(rts[1], rts[1]), PreconditionError);

  InterpolationData bad = data;
  bad.d = hopf_L();
  try {
    build_rtee(2, bad);
    FAIL("accepted a noncommutative d");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "commutative");
  }
  InterpolationData no_cert = data;
  no_cert.theta.certs = {};
  CHECK_THROWS_AS(build_rtee(2, no_cert), HypothesisError);
}

TEST_CASE("a scaled tau breaks the ideal") {
  InterpolationData data = flagship_G_E_L_cyc();
  SpeciesMap tau = data.tau;
  tau.apply = [f = data.tau.apply](const Term& x) { return Rational(2) * f(x); };
  data.tau = tau;  // certificates copied, so construction goes through
  RTee rt = build_rtee(2, data);
  CHECK_FALSE(check_ideal(rt, 3).passed);
}

TEST_CASE("hat f on a small example") {
  const RTee& rt = flagship_family()[0];
  // (a-b) with blocks {a} and {b}: τ forgets the graph, θ closes each order into a cycle.
  Term x = Term::composite(Term::graph(LabelSet({blk("a"), blk("b")}), {{blk("a"), blk("b")}}),
                           {Term::order(seq("a")), Term::order(seq("b"))});
  Term y = Term::composite(Term::star(LabelSet({blk("a"), blk("b")})),
                           {Term::cycle(seq("a")), Term::cycle(seq("b"))});
  CHECK(hat_f(rt)(x) == Vec(y));
}

TEST_CASE("port maps on the thirteen-label example") {
  Term x = thirteen_label_term();
  const auto& rts = flagship_family();
  std::string text;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec v = port_lower(rts[i])(x);
    REQUIRE(v.size() == 1);
    const auto& [t, c] = *v.begin();
    CHECK(c == 1);
    text += "r=" + std::to_string(rts[i].r) + ": " + t.to_string() + "\n";
  }
  Vec v2 = port_lower(rts[1])(x);
  const Term& lower2 = v2.begin()->first.right();
  CHECK(lower2.partition().size() == 2);  // the cycles (a) and (y)
  Vec v3 = port_lower(rts[2])(x);
  const Term& lower3 = v3.begin()->first.right();
  CHECK(lower3.partition().size() == 6);  // adds (cb), (ed), (hi), (mx)
  CHECK(v3.begin()->first.left().partition().size() == 1);
  CHECK(text == read_golden("ports_13_labels.txt"));
}
