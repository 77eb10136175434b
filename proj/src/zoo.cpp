#include "species/zoo.hpp"

#include <algorithm>

#include "species/errors.hpp"
#include "species/verify.hpp"

namespace species {

namespace {
constexpr std::size_t kCertifyN = 4;

std::vector<LabelPair> all_pairs(const LabelSet& ground) {
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    for (std::size_t j = i + 1; j < ground.size(); ++j) out.emplace_back(ground[i], ground[j]);
  return out;
}
}  // namespace

std::vector<Term> all_orders(const LabelSet& ground) {
  std::vector<Label> seq = ground.labels();
  std::vector<Term> out;
  do {
    out.push_back(Term::order(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::vector<Term> all_graphs(const LabelSet& ground) {
  auto pairs = all_pairs(ground);
  std::vector<Term> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<LabelPair> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.push_back(Term::graph(ground, std::move(edges)));
  }
  return out;
}

std::vector<Term> all_posets(const LabelSet& ground) {
  // Each unordered pair is unrelated, below, or above; keep the transitive choices.
  const std::size_t n = ground.size();
  auto pairs = all_pairs(ground);
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Term> out;
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n));
  for (std::size_t code = 0; code < total; ++code) {
    for (auto& row : less) std::fill(row.begin(), row.end(), false);
    std::vector<LabelPair> rel;
    std::size_t c = code, k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k, c /= 3) {
        if (c % 3 == 1) less[i][j] = true, rel.push_back(pairs[k]);
        if (c % 3 == 2) less[j][i] = true, rel.emplace_back(pairs[k].second, pairs[k].first);
      }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (less[i][j])
          for (std::size_t m = 0; m < n; ++m)
            if (less[j][m] && !less[i][m]) {
              transitive = false;
              break;
            }
    if (transitive) out.push_back(Term::poset(ground, std::move(rel)));
  }
  return out;
}

std::vector<Term> all_cycles(const LabelSet& ground) {
  if (ground.empty()) return {};
  std::vector<Label> rest(ground.begin() + 1, ground.end());
  std::vector<Term> out;
  do {
    std::vector<Label> seq{ground[0]};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.push_back(Term::cycle(std::move(seq)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Term restrict_term(const Term& x, const LabelSet& u) {
  if (!u.subset_of(x.ground()))
    throw DomainError(u.to_string() + " is not a subset of " + x.ground().to_string());
  switch (x.kind()) {
    case Kind::Star: return Term::star(u);
    case Kind::Order: {
      std::vector<Label> seq;
      for (const auto& l : x.sequence())
        if (u.contains(l)) seq.push_back(l);
      return Term::order(std::move(seq));
    }
    case Kind::Graph:
    case Kind::Poset: {
      std::vector<LabelPair> rel;
      for (const auto& p : x.relation())
        if (u.contains(p.first) && u.contains(p.second)) rel.push_back(p);
      return x.kind() == Kind::Graph ? Term::graph(u, std::move(rel))
                                     : Term::poset(u, std::move(rel));
    }
    default:
      throw DomainError(std::string("no restriction for ") + kind_name(x.kind()) + " terms");
  }
}

namespace {

Term union_of(const Term& x, const Term& y) {
  LabelSet ground = x.ground().unite(y.ground());
  switch (x.kind()) {
    case Kind::Star: return Term::star(ground);
    case Kind::Order: {
      auto seq = x.sequence();
      seq.insert(seq.end(), y.sequence().begin(), y.sequence().end());
      return Term::order(std::move(seq));
    }
    case Kind::Graph:
    case Kind::Poset: {
      auto rel = x.relation();
      rel.insert(rel.end(), y.relation().begin(), y.relation().end());
      return x.kind() == Kind::Graph ? Term::graph(ground, std::move(rel))
                                     : Term::poset(ground, std::move(rel));
    }
    default: throw DomainError("no product for this kind");
  }
}

Bimonoid restriction_bimonoid(std::string name, Kind kind, Species::Enumerator basis) {
  Species s(std::move(name), Shape{kind, {}}, std::move(basis));
  RestrictionFn rho = restrict_term;
  Bimonoid h{s, [](const Term& x, const Term& y) { return Vec(union_of(x, y)); },
             coproduct_from_restrictions(rho), rho, {}};
  certify(h, kCertifyN);
  return h;
}

void record(SpeciesMap& f, Property p, const Report& r) { f.certs.record(p, r.certificate()); }

}  // namespace

const Bimonoid& hopf_E() {
  static const Bimonoid h = restriction_bimonoid(
      "E", Kind::Star, [](const LabelSet& g) { return std::vector<Term>{Term::star(g)}; });
  return h;
}

const Bimonoid& hopf_L() {
  static const Bimonoid h = restriction_bimonoid("L", Kind::Order, all_orders);
  return h;
}

const Bimonoid& hopf_G() {
  static const Bimonoid h = restriction_bimonoid("G", Kind::Graph, all_graphs);
  return h;
}

const Bimonoid& hopf_Poset() {
  static const Bimonoid h = restriction_bimonoid("Pos", Kind::Poset, all_posets);
  return h;
}

const Bimonoid& hopf_One() {
  static const Bimonoid h = restriction_bimonoid("One", Kind::Star, [](const LabelSet& g) {
    return g.empty() ? std::vector<Term>{Term::star(g)} : std::vector<Term>{};
  });
  return h;
}

Comonoid trivial_comonoid(const Species& s) {
  Comonoid out{s,
               [](const Term& x, const LabelSet& s, const LabelSet& t) {
                 if (s.empty()) return Vec2(Tensor{Term::star({}), x});
                 if (t.empty()) return Vec2(Tensor{x, Term::star({})});
                 return Vec2();
               },
               std::nullopt,
               {}};
  certify(out, kCertifyN);
  return out;
}

const Comonoid& comonoid_cyc() {
  static const Comonoid c =
      trivial_comonoid(Species("cyc", Shape{Kind::Cycle, {}}, all_cycles));
  return c;
}

const Comonoid& comonoid_L_trivial() {
  static const Comonoid c = trivial_comonoid(truncate(
      Species("Ltriv", Shape{Kind::Order, {}}, all_orders), Truncation{TruncMode::Positive}));
  return c;
}

Comonoid positive_part(const Bimonoid& h) {
  return truncate(h.comonoid(), Truncation{TruncMode::Positive});
}

Bimonoid twisted_L() {
  const Bimonoid& l = hopf_L();
  Bimonoid h{Species("Ltw", Shape{Kind::Order, {}}, all_orders), l.mu,
             [](const Term& x, const LabelSet& s, const LabelSet& t) {
               Term right = restrict_term(x, t);
               if (s.size() % 2 == 1) {
                 auto seq = right.sequence();
                 std::reverse(seq.begin(), seq.end());
                 right = Term::order(std::move(seq));
               }
               return Vec2(Tensor{restrict_term(x, s), right});
             },
             RestrictionFn(restrict_term), {}};
  certify(h, kCertifyN);
  return h;
}

namespace {

SpeciesMap make_map(std::string name, const Species& source, const Species& target,
                    LinearFn f) {
  return SpeciesMap{std::move(name), source, target, std::move(f), {}};
}

Term antichain(const LabelSet& g) { return Term::poset(g, {}); }

Vec chains(const LabelSet& g) {
  Vec out;
  Rational w = 1 / factorial(static_cast<unsigned>(g.size()));
  for (const auto& l : all_orders(g)) {
    std::vector<LabelPair> rel;
    const auto& seq = l.sequence();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) rel.emplace_back(seq[i], seq[i + 1]);
    out.add(Term::poset(g, std::move(rel)), w);
  }
  return out;
}

// Records monoid/comonoid/restriction morphism certificates between bimonoids.
void certify_bimonoid_map(SpeciesMap& f, const Bimonoid& a, const Bimonoid& b) {
  record(f, Property::MonoidMorphism,
         check_monoid_morphism(f, a.monoid(), b.monoid(), kCertifyN));
  record(f, Property::ComonoidMorphism,
         check_comonoid_morphism(f, a.comonoid(), b.comonoid(), kCertifyN));
  record(f, Property::RestrictionMorphism,
         check_restriction_morphism(f, *a.restriction, *b.restriction, kCertifyN));
}

void certify_comonoid_map(SpeciesMap& f, const Comonoid& a, const Comonoid& b) {
  record(f, Property::ComonoidMorphism, check_comonoid_morphism(f, a, b, kCertifyN));
  if (a.restriction && b.restriction)
    record(f, Property::RestrictionMorphism,
           check_restriction_morphism(f, *a.restriction, *b.restriction, kCertifyN));
}

}  // namespace

const SpeciesMap& tau_GE() {
  static const SpeciesMap f = [] {
    auto m = make_map("tau_GE", hopf_G().species, hopf_E().species,
                      [](const Term& x) { return Vec(Term::star(x.ground())); });
    certify_bimonoid_map(m, hopf_G(), hopf_E());
    return m;
  }();
  return f;
}

const SpeciesMap& tau_LE() {
  static const SpeciesMap f = [] {
    auto m = make_map("tau_LE", hopf_L().species, hopf_E().species,
                      [](const Term& x) { return Vec(Term::star(x.ground())); });
    certify_bimonoid_map(m, hopf_L(), hopf_E());
    return m;
  }();
  return f;
}

const SpeciesMap& alpha() {
  static const SpeciesMap f = [] {
    auto m = make_map("alpha", hopf_E().species, hopf_Poset().species,
                      [](const Term& x) { return Vec(antichain(x.ground())); });
    certify_bimonoid_map(m, hopf_E(), hopf_Poset());
    return m;
  }();
  return f;
}

const SpeciesMap& lambda() {
  static const SpeciesMap f = [] {
    auto m = make_map("lambda", hopf_E().species, hopf_Poset().species,
                      [](const Term& x) { return chains(x.ground()); });
    certify_bimonoid_map(m, hopf_E(), hopf_Poset());
    return m;
  }();
  return f;
}

const SpeciesMap& theta_Lcyc() {
  static const SpeciesMap f = [] {
    const Comonoid& lplus = comonoid_L_trivial();
    auto m = make_map("theta_Lcyc", lplus.species, comonoid_cyc().species,
                      [](const Term& x) { return Vec(Term::cycle(x.sequence())); });
    certify_comonoid_map(m, lplus, comonoid_cyc());
    return m;
  }();
  return f;
}

namespace {
SpeciesMap forget(std::string name, const Bimonoid& from, const Bimonoid& to, LinearFn fn) {
  Comonoid a = positive_part(from), b = positive_part(to);
  auto m = make_map(std::move(name), a.species, b.species, std::move(fn));
  certify_comonoid_map(m, a, b);
  return m;
}
}  // namespace

const SpeciesMap& forget_edges() {
  static const SpeciesMap f = forget("forget_edges", hopf_G(), hopf_E(), [](const Term& x) {
    return Vec(Term::star(x.ground()));
  });
  return f;
}

const SpeciesMap& forget_order() {
  static const SpeciesMap f = forget("forget_order", hopf_L(), hopf_E(), [](const Term& x) {
    return Vec(Term::star(x.ground()));
  });
  return f;
}

const SpeciesMap& alpha_plus() {
  static const SpeciesMap f = forget("alpha+", hopf_E(), hopf_Poset(), [](const Term& x) {
    return Vec(antichain(x.ground()));
  });
  return f;
}

const SpeciesMap& lambda_plus() {
  static const SpeciesMap f = forget("lambda+", hopf_E(), hopf_Poset(),
                                     [](const Term& x) { return chains(x.ground()); });
  return f;
}

Term distinguished_singleton(const Species& s, const Label& label) {
  const auto& b = s.basis(LabelSet(std::vector<Label>{label}));
  if (b.size() != 1)
    throw HypothesisError("distinguished singleton",
                          s.name() + " has " + std::to_string(b.size()) +
                              " structures on a singleton; no distinguished term");
  return b.front();
}

}  // namespace species
