#include <doctest.h>

#include "species/errors.hpp"
#include "species/verify.hpp"
#include "species/zoo.hpp"

using namespace species;

namespace {

LabelSet ls(const std::string& s) { return LabelSet::parse(s); }
std::vector<Label> seq(std::initializer_list<const char*> xs) {
  std::vector<Label> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
LabelPair edge(const char* a, const char* b) { return {Label(a), Label(b)}; }

std::size_t fact(std::size_t n) { return n == 0 ? 1 : n * fact(n - 1); }

// Labeled posets, counted by brute force over relations on {0..n-1}.
std::size_t count_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) r[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && i != k && !r[i][k]) ok = false;
      }
    count += ok;
  }
  return count;
}

bool cert(const CertificateSet& c, Property p) { return c.holds(p); }

}  // namespace

TEST_CASE("dimensions against independent counts") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(hopf_E().species.dim(n) == 1);
    CHECK(hopf_L().species.dim(n) == fact(n));
    CHECK(hopf_G().species.dim(n) == std::size_t{1} << (n * (n - (n > 0)) / 2));
    CHECK(hopf_Poset().species.dim(n) == count_posets(n));
    CHECK(comonoid_cyc().species.dim(n) == (n == 0 ? 0 : fact(n - 1)));
    CHECK(hopf_One().species.dim(n) == (n == 0 ? 1 : 0));
  }
  CHECK(count_posets(4) == 219);
}

TEST_CASE("the four Hopf monoids carry their certificates") {
  for (const Bimonoid* h : {&hopf_E(), &hopf_L(), &hopf_G(), &hopf_Poset()}) {
    INFO(h->species.name());
    for (Property p : {Property::Associative, Property::Coassociative, Property::Compatible,
                       Property::LinearizedProduct, Property::LinearizedCoproduct,
                       Property::RestrictionAxioms, Property::Coherent,
                       Property::CoproductFromRestrictions})
      CHECK(cert(h->certs, p));
    CHECK(h->certs.find(Property::Associative)->n_max == 4);
  }
  CHECK(cert(hopf_E().certs, Property::Commutative));
  CHECK(cert(hopf_G().certs, Property::Cocommutative));
  CHECK_FALSE(cert(hopf_L().certs, Property::Commutative));
  CHECK(cert(hopf_L().certs, Property::Cocommutative));
  CHECK(hopf_E().unit() == Term());
}

TEST_CASE("induced restrictions") {
  Term g = Term::graph(ls("a,b,c"), {edge("a", "b"), edge("b", "c")});
  CHECK(restrict_term(g, ls("a,c")) == Term::graph(ls("a,c"), {}));
  CHECK(restrict_term(g, ls("b,c")) == Term::graph(ls("b,c"), {edge("b", "c")}));
  CHECK(restrict_term(Term::order(seq({"c", "a", "b"})), ls("b,c")) == Term::order(seq({"c", "b"})));
  Term p = Term::poset(ls("a,b,c"), {edge("a", "b"), edge("b", "c")});
  CHECK(restrict_term(p, ls("a,c")) == Term::poset(ls("a,c"), {edge("a", "c")}));
  CHECK_THROWS_AS(restrict_term(g, ls("z")), DomainError);
}

TEST_CASE("products and coproducts on small examples") {
  const Bimonoid& l = hopf_L();
  Vec prod = l.mu(Term::order(seq({"b"})), Term::order(seq({"c", "a"})));
  CHECK(prod == Vec(Term::order(seq({"b", "c", "a"}))));
  Vec2 cop = l.delta(Term::order(seq({"b", "c", "a"})), ls("a,b"), ls("c"));
  CHECK(cop == Vec2(Tensor{Term::order(seq({"b", "a"})), Term::order(seq({"c"}))}));
}

TEST_CASE("twisted L is coassociative but neither cocommutative nor compatible") {
  Bimonoid tw = twisted_L();
  CHECK(tw.species.name() == "Ltw");
  CHECK(cert(tw.certs, Property::Coassociative));
  CHECK_FALSE(cert(tw.certs, Property::Compatible));
  CHECK(cert(tw.certs, Property::LinearizedCoproduct));
  CHECK_FALSE(cert(tw.certs, Property::Cocommutative));
  Vec2 cop = tw.delta(Term::order(seq({"a", "b", "c"})), ls("a"), ls("b,c"));
  CHECK(cop == Vec2(Tensor{Term::order(seq({"a"})), Term::order(seq({"c", "b"}))}));
}

TEST_CASE("trivial comonoids") {
  const Comonoid& c = comonoid_cyc();
  CHECK(c.delta(Term::cycle(seq({"a", "b"})), ls("a"), ls("b")).empty());
  CHECK(cert(c.certs, Property::Coassociative));
  CHECK(cert(c.certs, Property::Cocommutative));
  const Comonoid& lt = comonoid_L_trivial();
  CHECK(lt.species.name() == "Ltriv+");
  CHECK(lt.species.positive());
  CHECK(lt.delta(Term::order(seq({"a", "b"})), ls("a"), ls("b")).empty());
  Comonoid gp = positive_part(hopf_G());
  CHECK(gp.species.name() == "G+");
  CHECK(gp.species.dim(0) == 0);
  CHECK(gp.species.dim(3) == 8);
}

TEST_CASE("map certificates, including the failures of lambda") {
  for (const SpeciesMap* m : {&tau_GE(), &tau_LE(), &alpha()}) {
    INFO(m->name);
    CHECK(cert(m->certs, Property::MonoidMorphism));
    CHECK(cert(m->certs, Property::ComonoidMorphism));
    CHECK(cert(m->certs, Property::RestrictionMorphism));
  }
  const SpeciesMap& lam = lambda();
  CHECK(cert(lam.certs, Property::ComonoidMorphism));
  CHECK_FALSE(cert(lam.certs, Property::MonoidMorphism));
  CHECK_FALSE(cert(lam.certs, Property::RestrictionMorphism));
  Report r = check_restriction_morphism(lam, *hopf_E().restriction, *hopf_Poset().restriction, 3);
  CHECK_FALSE(r.passed);
  CHECK(r.witness.has_value());

  // λ(∗_{a,b}) = ½ (a<b) + ½ (b<a)
  Vec img = lam(Term::star(ls("a,b")));
  CHECK(img.size() == 2);
  CHECK(img.coefficient(Term::poset(ls("a,b"), {edge("a", "b")})) == Rational(1) / 2);
  CHECK(alpha()(Term::star(ls("a,b"))) == Vec(Term::poset(ls("a,b"), {})));

  CHECK(cert(theta_Lcyc().certs, Property::ComonoidMorphism));
  CHECK(theta_Lcyc()(Term::order(seq({"b", "a", "c"}))) == Vec(Term::cycle(seq({"a", "c", "b"}))));
  CHECK(cert(forget_edges().certs, Property::ComonoidMorphism));
  CHECK(cert(forget_order().certs, Property::ComonoidMorphism));
  CHECK(cert(alpha_plus().certs, Property::ComonoidMorphism));
  CHECK(cert(lambda_plus().certs, Property::ComonoidMorphism));
}

TEST_CASE("distinguished singletons") {
  CHECK(distinguished_singleton(hopf_G().species, Label("a")) == Term::graph(ls("a"), {}));
  CHECK(distinguished_singleton(hopf_E().species, Label("x")) == Term::star(ls("x")));
  CHECK_THROWS_AS(distinguished_singleton(hopf_One().species, Label("a")), HypothesisError);
}
