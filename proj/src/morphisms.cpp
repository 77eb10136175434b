#include "species/morphisms.hpp"

#include <set>

#include "species/errors.hpp"
#include "species/ops.hpp"
#include "species/zoo.hpp"

namespace species {

Report check_bimonoid_morphism(const SpeciesMap& f, const Bimonoid& source, const Bimonoid& target,
                               std::size_t n_max) {
  return combine("bimonoid morphism", f.name,
                 {check_monoid_morphism(f, source.monoid(), target.monoid(), n_max),
                  check_comonoid_morphism(f, source.comonoid(), target.comonoid(), n_max)});
}

namespace {

void require(const SpeciesMap& f, Property p, const std::string& hypothesis) {
  if (!f.certs.holds(p))
    throw HypothesisError(hypothesis,
                          f.name + " lacks a certificate for: " + property_name(p));
}

void require_between(const SpeciesMap& f, const Species& from, const Species& to) {
  if (f.source.name() != from.name() || f.target.name() != to.name())
    throw PreconditionError(f.name + " maps " + f.source.name() + " -> " + f.target.name() +
                            ", expected " + from.name() + " -> " + to.name());
}

// Applies the outer map to the outer term and the inner map to every block.
LinearFn blockwise(SpeciesMap outer, SpeciesMap inner) {
  return [outer, inner](const Term& x) {
    std::vector<Vec> images;
    for (const auto& t : x.inners()) images.push_back(inner(t));
    auto tuples = tensor_expand(images);
    Vec out;
    for (const auto& [o, c] : outer(x.outer()))
      for (const auto& [tuple, d] : tuples) out.add(Term::composite(o, tuple), c * d);
    return out;
  };
}

Label singleton_block(const Label& l) { return LabelSet(std::vector<Label>{l}).as_block_label(); }

}  // namespace

SpeciesMap f_tau_theta(const Tee& source, const Tee& target, const SpeciesMap& tau,
                       const SpeciesMap& theta, std::size_t check_n) {
  require(tau, Property::RestrictionMorphism, "restriction morphism");
  require(tau, Property::MonoidMorphism, "bimonoid map");
  require(tau, Property::ComonoidMorphism, "bimonoid map");
  require(theta, Property::ComonoidMorphism, "comonoid map");
  require_between(tau, source.b.species, target.b.species);
  require_between(theta, source.p.species, target.p.species);

  SpeciesMap f{"f[" + tau.name + "," + theta.name + "]", source.hopf.species,
               target.hopf.species, blockwise(tau, theta), {}};
  f.certs.record(Property::MonoidMorphism,
                 check_monoid_morphism(f, source.hopf.monoid(), target.hopf.monoid(), check_n)
                     .certificate());
  f.certs.record(
      Property::ComonoidMorphism,
      check_comonoid_morphism(f, source.hopf.comonoid(), target.hopf.comonoid(), check_n)
          .certificate());
  return f;
}

TeeMorphism abelianization(const Comonoid& p, std::size_t check_n) {
  Tee source = build_tee(hopf_L(), p);
  Tee target = build_tee(hopf_E(), p);
  SpeciesMap f = f_tau_theta(source, target, tau_LE(), identity_map(p.species), check_n);
  f.name = "abelianization";
  return {std::move(source), std::move(target), std::move(f)};
}

// --- associativity ----------------------------------------------------------

Term assoc_regroup(const Term& z) {
  const Term& w = z.outer();
  std::map<Label, Term> q_of;
  for (const auto& t : z.inners()) q_of.emplace(t.ground().as_block_label(), t);
  std::map<Label, Label> rename;
  std::vector<Term> inners;
  for (const auto& pi : w.inners()) {
    std::vector<Term> qs;
    LabelSet y;
    for (const auto& c : pi.ground()) {
      qs.push_back(q_of.at(c));
      y = y.unite(block_members(c));
    }
    rename.emplace(pi.ground().as_block_label(), y.as_block_label());
    inners.push_back(Term::composite(pi, std::move(qs)));
  }
  return Term::composite(w.outer().relabel(Bijection(std::move(rename))), std::move(inners));
}

Term assoc_ungroup(const Term& y) {
  std::map<Label, Label> rename;
  std::vector<Term> pis, qs;
  for (const auto& yi : y.inners()) {
    rename.emplace(yi.ground().as_block_label(), yi.outer().ground().as_block_label());
    pis.push_back(yi.outer());
    qs.insert(qs.end(), yi.inners().begin(), yi.inners().end());
  }
  Term w = Term::composite(y.outer().relabel(Bijection(std::move(rename))), std::move(pis));
  return Term::composite(w, std::move(qs));
}

AssocIso assoc_iso(const Bimonoid& b, const Comonoid& p, const Comonoid& q,
                   std::size_t certify_n) {
  if (!p.restriction)
    throw HypothesisError("restrictions", p.species.name() + " has no restriction structure");
  Tee inner = build_tee(b, p);
  certify(inner.hopf, certify_n);
  Tee source = build_tee(inner.hopf, q);
  Comonoid pq = substitution_comonoid(p, q);
  certify(pq, certify_n);
  Tee target = build_tee(b, pq);
  SpeciesMap fwd{"assoc", source.hopf.species, target.hopf.species,
                 [](const Term& z) { return Vec(assoc_regroup(z)); }, {}};
  SpeciesMap bwd{"assoc^-1", target.hopf.species, source.hopf.species,
                 [](const Term& y) { return Vec(assoc_ungroup(y)); }, {}};
  return {std::move(inner), std::move(source), std::move(target), std::move(fwd), std::move(bwd)};
}

Report check_assoc_iso(const AssocIso& iso, std::size_t n_max) {
  Report bij;
  bij.law = "bijection on bases";
  bij.subject = iso.forward.name;
  bij.n_max = n_max;
  for (std::size_t n = 0; n <= n_max && bij.passed; ++n) {
    auto ground = canonical_labels(n);
    const auto& src = iso.source.hopf.species.basis(ground);
    const auto& tgt = iso.target.hopf.species.basis(ground);
    std::set<Term> seen;
    for (const auto& z : src) {
      ++bij.cases;
      Term y = assoc_regroup(z);
      if (!iso.target.hopf.species.contains(y) || !seen.insert(y).second ||
          assoc_ungroup(y) != z) {
        bij.passed = false;
        bij.message = "regrouping is not a bijection at " + z.to_string();
        bij.witness = Json{{"x", encode(z)}, {"image", encode(y)}};
        break;
      }
    }
    if (bij.passed && seen.size() != tgt.size()) {
      bij.passed = false;
      bij.message = "dimensions differ in degree " + std::to_string(n) + ": " +
                    std::to_string(src.size()) + " vs " + std::to_string(tgt.size());
    }
  }
  return combine("associativity isomorphism", iso.forward.name,
                 {bij, check_bimonoid_morphism(iso.forward, iso.source.hopf, iso.target.hopf,
                                               n_max)});
}

// --- χ evaluation -----------------------------------------------------------

namespace {
const Bimonoid& chi_outer(ChiBase base) { return base == ChiBase::L ? hopf_L() : hopf_E(); }

void require_commutative(ChiBase base, const Bimonoid& h) {
  if (base == ChiBase::E && !h.certs.holds(Property::Commutative))
    throw HypothesisError("commutative", h.species.name() +
                                             " is not certified commutative; chi over E "
                                             "would depend on the block order");
}
}  // namespace

Vec chi_eval(ChiBase base, const Bimonoid& h, const Term& x) {
  require_commutative(base, h);
  std::vector<const Term*> order;
  if (base == ChiBase::L) {
    for (const auto& l : x.outer().sequence())
      order.push_back(&x.inners()[x.partition().block_index_by_label(l)]);
  } else {
    for (const auto& t : x.inners()) order.push_back(&t);
  }
  if (order.empty()) return Vec(h.unit());
  Vec acc(*order.front());
  for (std::size_t i = 1; i < order.size(); ++i) acc = product(h.mu, acc, Vec(*order[i]));
  return acc;
}

SpeciesMap chi_map(ChiBase base, const Bimonoid& h) {
  require_commutative(base, h);
  return SpeciesMap{
      std::string("chi_") + (base == ChiBase::L ? "L" : "E") + "[" + h.species.name() + "]",
      substitute_species(chi_outer(base).species, positive_part(h).species), h.species,
      [base, h](const Term& x) { return chi_eval(base, h, x); }, {}};
}

Report check_chi_squares(ChiBase base, const Bimonoid& h, std::size_t n_max) {
  SpeciesMap chi = chi_map(base, h);
  Tee tee = build_tee(chi_outer(base), positive_part(h));
  return check_bimonoid_morphism(chi, tee.hopf, h, n_max);
}

// --- embeddings ---------------------------------------------------------------

SpeciesMap embed_p(const Tee& tee) {
  distinguished_singleton(tee.b.species, Label("1"));
  Species b = tee.b.species;
  return SpeciesMap{"embed_p", tee.p.species, tee.hopf.species,
                    [b](const Term& x) {
                      Term outer = distinguished_singleton(b, x.ground().as_block_label());
                      return Vec(Term::composite(outer, {x}));
                    },
                    {}};
}

SpeciesMap embed_b(const Tee& tee) {
  distinguished_singleton(tee.p.species, Label("1"));
  Species p = tee.p.species;
  return SpeciesMap{"embed_b", tee.b.species, tee.hopf.species,
                    [p](const Term& x) {
                      std::map<Label, Label> rename;
                      std::vector<Term> inners;
                      for (const auto& l : x.ground()) {
                        rename.emplace(l, singleton_block(l));
                        inners.push_back(distinguished_singleton(p, l));
                      }
                      return Vec(Term::composite(x.relabel(Bijection(std::move(rename))),
                                                 std::move(inners)));
                    },
                    {}};
}

Report check_embed_p(const Tee& tee, std::size_t n_max) {
  SpeciesMap f = embed_p(tee);
  return combine("embedding of p", f.name,
                 {check_injective(f, n_max),
                  check_comonoid_morphism(f, tee.p, tee.hopf.comonoid(), n_max)});
}

Report check_embed_b(const Tee& tee, std::size_t n_max) {
  SpeciesMap f = embed_b(tee);
  return combine("embedding of b", f.name,
                 {check_injective(f, n_max), check_bimonoid_morphism(f, tee.b, tee.hopf, n_max)});
}

// --- posets -----------------------------------------------------------------

Term poset_collapse(const Term& x) {
  std::vector<LabelPair> rel;
  for (const auto& t : x.inners()) rel.insert(rel.end(), t.relation().begin(), t.relation().end());
  for (const auto& [a, b] : x.outer().relation())
    for (const auto& u : block_members(a))
      for (const auto& v : block_members(b)) rel.emplace_back(u, v);
  return Term::poset(x.ground(), std::move(rel));
}

SpeciesMap poset_collapse_map(const Tee& pos_pos) {
  return SpeciesMap{"collapse", pos_pos.hopf.species, hopf_Poset().species,
                    [](const Term& x) { return Vec(poset_collapse(x)); }, {}};
}

PosetSplittings poset_splittings(std::size_t check_n) {
  Tee o1 = build_tee(hopf_Poset(), positive_part(hopf_E()));
  Tee pp = build_tee(hopf_Poset(), positive_part(hopf_Poset()));
  SpeciesMap id = identity_map(hopf_Poset().species);
  SpeciesMap fa = f_tau_theta(o1, pp, id, alpha_plus(), check_n);
  SpeciesMap fl = f_tau_theta(o1, pp, id, lambda_plus(), check_n);
  SpeciesMap collapse = poset_collapse_map(pp);
  SpeciesMap via_alpha = compose(collapse, fa);
  SpeciesMap via_lambda = compose(collapse, fl);
  SpeciesMap inclusion = embed_b(o1);
  return {std::move(o1),        std::move(pp),         std::move(collapse),
          std::move(via_alpha), std::move(via_lambda), std::move(inclusion)};
}

Report check_splitting(const PosetSplittings& ps, const SpeciesMap& s, std::size_t n_max) {
  return combine("splitting", s.name,
                 {check_bimonoid_morphism(s, ps.o1.hopf, hopf_Poset(), n_max),
                  check_surjective(s, n_max),
                  check_equal_maps(compose(s, ps.inclusion), identity_map(hopf_Poset().species),
                                   n_max)});
}

}  // namespace species
