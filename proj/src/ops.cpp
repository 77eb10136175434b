#include "species/ops.hpp"

#include "species/errors.hpp"

namespace species {

Species sum_species(const Species& p, const Species& q) {
  return Species("(" + p.name() + " + " + q.name() + ")",
                 Shape{Kind::Tagged, {p.shape(), q.shape()}}, [p, q](const LabelSet& g) {
                   std::vector<Term> out;
                   for (const auto& t : p.basis(g)) out.push_back(Term::tagged(0, t));
                   for (const auto& t : q.basis(g)) out.push_back(Term::tagged(1, t));
                   return out;
                 });
}

Species hadamard_species(const Species& p, const Species& q) {
  return Species("(" + p.name() + " * " + q.name() + ")",
                 Shape{Kind::Pair, {p.shape(), q.shape()}}, [p, q](const LabelSet& g) {
                   std::vector<Term> out;
                   for (const auto& a : p.basis(g))
                     for (const auto& b : q.basis(g)) out.push_back(Term::pair(a, b));
                   return out;
                 });
}

Species cauchy_species(const Species& p, const Species& q) {
  return Species("(" + p.name() + " . " + q.name() + ")",
                 Shape{Kind::Cauchy, {p.shape(), q.shape()}}, [p, q](const LabelSet& g) {
                   std::vector<Term> out;
                   for (const auto& d : enumerate_decompositions(g, 2))
                     for (const auto& a : p.basis(d[0]))
                       for (const auto& b : q.basis(d[1])) out.push_back(Term::cauchy(a, b));
                   return out;
                 });
}

Species substitute_species(const Species& p, const Species& q) {
  if (!q.positive())
    throw PreconditionError("substitution argument " + q.name() + " is not positive");
  return Species(
      "(" + p.name() + " o " + q.name() + ")", Shape{Kind::Composite, {p.shape(), q.shape()}},
      [p, q](const LabelSet& g) {
        std::vector<Term> out;
        for (const auto& x : enumerate_partitions(g)) {
          // Mixed-radix walk over one inner term per block.
          std::vector<const std::vector<Term>*> inner;
          bool empty = false;
          for (const auto& b : x.blocks()) {
            inner.push_back(&q.basis(b));
            empty = empty || inner.back()->empty();
          }
          if (empty) continue;
          const auto& outers = p.basis(x.block_labels());
          if (outers.empty()) continue;
          std::vector<std::size_t> idx(inner.size(), 0);
          while (true) {
            std::vector<Term> choice;
            for (std::size_t i = 0; i < inner.size(); ++i) choice.push_back((*inner[i])[idx[i]]);
            for (const auto& o : outers) out.push_back(Term::composite(o, choice));
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == inner[i]->size()) idx[i++] = 0;
            if (i == idx.size()) break;
          }
        }
        return out;
      });
}

Bimonoid cauchy_bimonoid(const Bimonoid& h1, const Bimonoid& h2) {
  if (!h1.species.connected() || !h2.species.connected())
    throw PreconditionError("Cauchy product of bimonoids needs connected factors");
  ProductFn mu = [mu1 = h1.mu, mu2 = h2.mu](const Term& x, const Term& y) {
    Vec out;
    for (const auto& [a, c] : mu1(x.left(), y.left()))
      for (const auto& [b, d] : mu2(x.right(), y.right())) out.add(Term::cauchy(a, b), c * d);
    return out;
  };
  CoproductFn delta = [d1 = h1.delta, d2 = h2.delta](const Term& x, const LabelSet& s,
                                                       const LabelSet& t) {
    const auto &u = x.left().ground(), &v = x.right().ground();
    Vec2 out;
    for (const auto& [a, c] : d1(x.left(), s.intersect(u), t.intersect(u)))
      for (const auto& [b, d] : d2(x.right(), s.intersect(v), t.intersect(v)))
        out.add(Tensor{Term::cauchy(a[0], b[0]), Term::cauchy(a[1], b[1])}, c * d);
    return out;
  };
  return Bimonoid{cauchy_species(h1.species, h2.species), mu, delta, std::nullopt, {}};
}

}  // namespace species
