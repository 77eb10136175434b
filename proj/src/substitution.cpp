#include "species/substitution.hpp"

#include "species/errors.hpp"
#include "species/ops.hpp"

namespace species {

Term restrict_down(const RestrictionFn& rho, const Term& outer, const SetPartition& x,
                   const LabelSet& t) {
  LabelSet support = partition_support_restrict(x, t).block_labels();
  return rho(outer, support).relabel(support_to_restriction(x, t));
}

LinComb<InnerSplit> tilde_delta(const CoproductFn& delta_p, std::span<const Term> inners,
                                const LabelSet& s, const LabelSet& t) {
  LinComb<InnerSplit> acc{InnerSplit{}};
  for (const auto& inner : inners) {
    const LabelSet& b = inner.ground();
    LabelSet bs = b.intersect(s), bt = b.intersect(t);
    if (bs.size() + bt.size() != b.size())
      throw DomainError("split does not cover block " + b.to_string());
    LinComb<InnerSplit> next;
    if (bt.empty() || bs.empty()) {
      for (const auto& [split, c] : acc) {
        InnerSplit out = split;
        (bt.empty() ? out.first : out.second).push_back(inner);
        next.add(out, c);
      }
    } else {
      Vec2 pieces = delta_p(inner, bs, bt);
      for (const auto& [split, c] : acc)
        for (const auto& [tensor, d] : pieces) {
          InnerSplit out = split;
          out.first.push_back(tensor[0]);
          out.second.push_back(tensor[1]);
          next.add(out, c * d);
        }
    }
    acc = std::move(next);
  }
  return acc;
}

Vec tee_mu(const ProductFn& mu_b, const Term& x, const Term& y) {
  std::vector<Term> inners(x.inners().begin(), x.inners().end());
  inners.insert(inners.end(), y.inners().begin(), y.inners().end());
  Vec out;
  for (const auto& [o, c] : mu_b(x.outer(), y.outer())) out.add(Term::composite(o, inners), c);
  return out;
}

Vec2 tee_delta(const RestrictionFn& rho_b, const CoproductFn& delta_p, const Term& x,
               const LabelSet& s, const LabelSet& t) {
  const SetPartition& px = x.partition();
  Term bs = restrict_down(rho_b, x.outer(), px, s);
  Term bt = restrict_down(rho_b, x.outer(), px, t);
  Vec2 out;
  for (const auto& [split, c] : tilde_delta(delta_p, x.inners(), s, t))
    out.add(Tensor{Term::composite(bs, split.first), Term::composite(bt, split.second)}, c);
  return out;
}

Term tee_restrict(const RestrictionFn& rho_b, const RestrictionFn& rho_p, const Term& x,
                  const LabelSet& u) {
  std::vector<Term> inners;
  for (const auto& inner : x.inners()) {
    LabelSet cut = inner.ground().intersect(u);
    if (!cut.empty()) inners.push_back(rho_p(inner, cut));
  }
  return Term::composite(restrict_down(rho_b, x.outer(), x.partition(), u), std::move(inners));
}

Comonoid substitution_comonoid(const Comonoid& b, const Comonoid& p) {
  if (!b.restriction)
    throw HypothesisError("restrictions", b.species.name() + " has no restriction structure");
  RestrictionFn rho_b = *b.restriction;
  Comonoid out{substitute_species(b.species, p.species),
               [rho_b, dp = p.delta](const Term& x, const LabelSet& s, const LabelSet& t) {
                 return tee_delta(rho_b, dp, x, s, t);
               },
               std::nullopt,
               {}};
  if (p.restriction) {
    out.restriction = [rho_b, rp = *p.restriction](const Term& x, const LabelSet& u) {
      return tee_restrict(rho_b, rp, x, u);
    };
  }
  return out;
}

namespace {
void require(const CertificateSet& certs, Property p, const std::string& who,
             const std::string& name) {
  if (!certs.holds(p))
    throw HypothesisError(name, who + " lacks a certificate for: " + name);
}
}  // namespace

Tee build_tee(const Bimonoid& b, const Comonoid& p) {
  const std::string& bn = b.species.name();
  if (!b.species.connected()) throw HypothesisError("connected", bn + " is not connected");
  require(b.certs, Property::Cocommutative, bn, "cocommutative");
  require(b.certs, Property::LinearizedProduct, bn, "linearized");
  require(b.certs, Property::LinearizedCoproduct, bn, "linearized");
  if (!b.restriction) throw HypothesisError("restrictions", bn + " has no restriction structure");
  require(b.certs, Property::CoproductFromRestrictions, bn, "restrictions");
  require(b.certs, Property::Coherent, bn, "coherence");
  require(b.certs, Property::RestrictionAxioms, bn, "restrictions");
  require(b.certs, Property::Associative, bn, "associative");
  require(b.certs, Property::Coassociative, bn, "coassociative");
  require(b.certs, Property::Compatible, bn, "compatible");
  const std::string& pn = p.species.name();
  if (!p.species.positive()) throw HypothesisError("positive", pn + " is not positive");
  require(p.certs, Property::Coassociative, pn, "coassociative");

  Comonoid c = substitution_comonoid(b.comonoid(), p);
  Bimonoid h{Species("T[" + bn + "](" + pn + ")", c.species.shape(),
                     [s = c.species](const LabelSet& g) { return s.basis(g); }),
             [mu = b.mu](const Term& x, const Term& y) { return tee_mu(mu, x, y); }, c.delta,
             c.restriction, {}};
  h.certs.record(Property::Connected, {true, 0, ""});
  return Tee{b, p, std::move(h)};
}

}  // namespace species
