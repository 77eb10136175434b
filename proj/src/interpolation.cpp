#include "species/interpolation.hpp"

#include "species/errors.hpp"
#include "species/linalg.hpp"
#include "species/morphisms.hpp"
#include "species/ops.hpp"
#include "species/zoo.hpp"

namespace species {

InterpolationData flagship_G_E_L_cyc() {
  return {hopf_G(), hopf_E(), comonoid_L_trivial(), comonoid_cyc(), tau_GE(), theta_Lcyc()};
}

InterpolationData flagship_L_E_G_E() {
  return {hopf_L(),     hopf_E(),   positive_part(hopf_G()), positive_part(hopf_E()),
          tau_LE(), forget_edges()};
}

namespace {

LabelSet block_labels_of(const std::vector<LabelSet>& blocks) {
  std::vector<Label> out;
  for (const auto& b : blocks) out.push_back(b.as_block_label());
  return LabelSet(std::move(out));
}

// Σ composite(o, tuple) over o ∈ outer and tuples of the blockwise images.
Vec composites(const Vec& outer, const std::vector<Vec>& inner) {
  auto tuples = tensor_expand(inner);
  Vec out;
  for (const auto& [o, c] : outer)
    for (const auto& [t, d] : tuples) out.add(Term::composite(o, t), c * d);
  return out;
}

const RestrictionFn& restriction_of(const Bimonoid& b) {
  if (!b.restriction)
    throw HypothesisError("restrictions", b.species.name() + " has no restriction structure");
  return *b.restriction;
}

// The union of the blocks of x's partition with size in [lo, hi).
LabelSet blocks_sized(const Term& x, std::size_t lo, std::size_t hi) {
  LabelSet out;
  for (const auto& b : x.partition().blocks())
    if (b.size() >= lo && b.size() < hi) out = out.unite(b);
  return out;
}

}  // namespace

HatF::HatF(const InterpolationData& data)
    : rho_b_(restriction_of(data.b)),
      mu_d_(data.d.mu),
      unit_d_(data.d.unit()),
      tau_(data.tau),
      theta_(data.theta) {
  if (!data.d.certs.holds(Property::Commutative))
    throw HypothesisError("commutative", data.d.species.name() + " is not certified commutative");
}

Vec HatF::operator()(const Term& x) const {
  const Term& beta = x.outer();
  Vec acc(unit_d_);
  for (const auto& cls : group_blocks_by_size(x.partition())) {
    if (cls.empty()) continue;
    acc = product(mu_d_, acc, tau_(rho_b_(beta, block_labels_of(cls))));
  }
  std::vector<Vec> inner;
  for (const auto& t : x.inners()) inner.push_back(theta_(t));
  return composites(acc, inner);
}

Reducer::Reducer(std::size_t r, const InterpolationData& data)
    : r_(r), rho_b_(restriction_of(data.b)), mu_d_(data.d.mu), tau_(data.tau),
      theta_(data.theta) {}

bool Reducer::has_small_block(const Term& x) const {
  for (const auto& b : x.left().partition().blocks())
    if (b.size() < r_) return true;
  return false;
}

Vec Reducer::operator()(const Term& x) const {
  if (!has_small_block(x)) return Vec(x);
  const Term& u = x.left();
  const Term& v = x.right();
  auto [large, small] = large_small_split(u.partition(), r_);
  const Term& beta = u.outer();

  std::vector<Term> kept;
  std::vector<Vec> moved;
  for (const auto& t : u.inners()) {
    if (t.ground().size() >= r_)
      kept.push_back(t);
    else
      moved.push_back(theta_(t));
  }
  Term left = Term::composite(rho_b_(beta, large.block_labels()), std::move(kept));

  Vec outer = product(mu_d_, tau_(rho_b_(beta, small.block_labels())), Vec(v.outer()));
  for (const auto& t : v.inners()) moved.push_back(Vec(t));
  Vec out;
  for (const auto& [right, c] : composites(outer, moved)) out.add(Term::cauchy(left, right), c);
  return out;
}

Vec Reducer::operator()(const Vec& v) const {
  return apply_linear<Term>(v, [this](const Term& t) { return (*this)(t); });
}

RTee build_rtee(std::size_t r, const InterpolationData& data) {
  if (r == 0) throw PreconditionError("the interpolation threshold r must be positive");
  const SpeciesMap& tau = data.tau;
  for (auto [p, h] : {std::pair{Property::RestrictionMorphism, "restriction morphism"},
                      std::pair{Property::MonoidMorphism, "bimonoid map"},
                      std::pair{Property::ComonoidMorphism, "bimonoid map"}})
    if (!tau.certs.holds(p))
      throw HypothesisError(h, tau.name + " lacks a certificate for: " + property_name(p));
  if (!data.theta.certs.holds(Property::ComonoidMorphism))
    throw HypothesisError("comonoid map", data.theta.name + " lacks a certificate for: " +
                                              property_name(Property::ComonoidMorphism));
  if (!data.d.certs.holds(Property::Commutative))
    throw HypothesisError("commutative", data.d.species.name() + " is not certified commutative");

  Tee upper = build_tee(data.b, data.p);
  Tee lower = build_tee(data.d, data.q);
  Tee lower_small = build_tee(data.d, truncate(data.q, Truncation{TruncMode::Below, r}));
  Bimonoid ambient = cauchy_bimonoid(upper.hopf, lower_small.hopf);
  Comonoid p_large = truncate(data.p, Truncation{TruncMode::AtLeast, r});
  Species carrier =
      cauchy_species(substitute_species(data.b.species, p_large.species), lower_small.hopf.species);
  Reducer red(r, data);
  Bimonoid quotient{
      Species(std::to_string(r) + "-T[" + data.b.species.name() + "," + data.d.species.name() +
                  "](" + data.p.species.name() + "," + data.q.species.name() + ")",
              carrier.shape(), [carrier](const LabelSet& g) { return carrier.basis(g); }),
      [red, mu = ambient.mu](const Term& x, const Term& y) { return red(mu(x, y)); },
      [red, delta = ambient.delta](const Term& x, const LabelSet& s, const LabelSet& t) {
        Vec2 out;
        for (const auto& [tensor, c] : delta(x, s, t))
          for (const auto& [a, c1] : red(tensor[0]))
            for (const auto& [b, c2] : red(tensor[1])) out.add(Tensor{a, b}, c * c1 * c2);
        return out;
      },
      std::nullopt,
      {}};
  return RTee{r,
              data,
              std::move(upper),
              std::move(lower),
              std::move(lower_small),
              std::move(ambient),
              std::move(quotient),
              std::move(red)};
}

std::vector<Vec> ideal_generators(const RTee& rt, const LabelSet& ground) {
  std::vector<Vec> out;
  for (const auto& x : rt.ambient.species.basis(ground))
    if (rt.reduce.has_small_block(x)) out.push_back(Vec(x) - rt.reduce(x));
  return out;
}

namespace {

Json set_json(const LabelSet& s) {
  Json arr = Json::array();
  for (const auto& l : s) arr.push_back(encode_label(l));
  return arr;
}

Report start(std::string law, const RTee& rt, std::size_t n_max) {
  Report r;
  r.law = std::move(law);
  r.subject = rt.quotient.species.name();
  r.n_max = n_max;
  return r;
}

void fail(Report& r, std::string message, Json witness) {
  r.passed = false;
  r.message = std::move(message);
  r.witness = std::move(witness);
}

}  // namespace

Report check_ideal(const RTee& rt, std::size_t n_max) {
  Report rep = start("ideal", rt, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    Echelon<Term> span;
    for (const auto& g : ideal_generators(rt, ground)) span.insert(g);
    for (const auto& d : enumerate_decompositions(ground, 2)) {
      const auto& basis_s = rt.ambient.species.basis(d[0]);
      auto gens_t = ideal_generators(rt, d[1]);
      auto gens_s = ideal_generators(rt, d[0]);
      const auto& basis_t = rt.ambient.species.basis(d[1]);
      for (const auto& h : basis_s)
        for (const auto& g : gens_t) {
          ++rep.cases;
          Vec hg = product(rt.ambient.mu, Vec(h), g);
          if (!span.contains(hg)) {
            fail(rep, "h * x is outside the span",
                 Json{{"h", encode(h)}, {"x", encode(g)}, {"product", encode(hg)}});
            return rep;
          }
        }
      for (const auto& g : gens_s)
        for (const auto& h : basis_t) {
          ++rep.cases;
          Vec gh = product(rt.ambient.mu, g, Vec(h));
          if (!span.contains(gh)) {
            fail(rep, "x * h is outside the span",
                 Json{{"x", encode(g)}, {"h", encode(h)}, {"product", encode(gh)}});
            return rep;
          }
        }
    }
  }
  return rep;
}

Report check_coideal(const RTee& rt, std::size_t n_max) {
  Report rep = start("coideal", rt, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    auto gens = ideal_generators(rt, ground);
    if (gens.empty()) continue;
    for (const auto& d : enumerate_decompositions(ground, 2)) {
      Echelon<Tensor> span;
      for (const auto& g : ideal_generators(rt, d[0]))
        for (const auto& b : rt.ambient.species.basis(d[1]))
          span.insert(apply_linear<Tensor>(g, [&](const Term& a) { return Vec2(Tensor{a, b}); }));
      for (const auto& b : rt.ambient.species.basis(d[0]))
        for (const auto& g : ideal_generators(rt, d[1]))
          span.insert(apply_linear<Tensor>(g, [&](const Term& a) { return Vec2(Tensor{b, a}); }));
      for (const auto& g : gens) {
        ++rep.cases;
        Vec2 dg = coproduct(rt.ambient.delta, g, d[0], d[1]);
        if (!span.contains(dg)) {
          fail(rep, "Delta(x) is outside ambient (x) span + span (x) ambient",
               Json{{"S", set_json(d[0])}, {"T", set_json(d[1])}, {"x", encode(g)},
                    {"delta", encode(dg)}});
          return rep;
        }
      }
    }
  }
  return rep;
}

std::vector<DimRow> quotient_dims(const RTee& rt, std::size_t n_max) {
  std::vector<DimRow> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    out.push_back({n, rt.ambient.species.basis(ground).size(),
                   rank(ideal_generators(rt, ground)), rt.quotient.species.basis(ground).size()});
  }
  return out;
}

Report check_quotient_dims(const RTee& rt, std::size_t n_max) {
  Report rep = start("quotient dimensions", rt, n_max);
  for (const auto& row : quotient_dims(rt, n_max)) {
    ++rep.cases;
    if (row.ambient - row.generators_rank != row.carrier) {
      fail(rep, "dim ambient - rank != dim carrier in degree " + std::to_string(row.n),
           Json{{"n", row.n},
                {"ambient", row.ambient},
                {"rank", row.generators_rank},
                {"carrier", row.carrier}});
      return rep;
    }
  }
  return rep;
}

Report check_confluence(const RTee& rt, std::size_t n_max) {
  Report rep = start("confluence", rt, n_max);
  const Reducer& red = rt.reduce;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& x : rt.ambient.species.basis(ground)) {
      ++rep.cases;
      Vec once = red(x);
      if (red(once) != once) {
        fail(rep, "reduce is not idempotent", Json{{"x", encode(x)}, {"reduce", encode(once)}});
        return rep;
      }
      for (const auto& d : enumerate_decompositions(ground, 2)) {
        Vec2 full = coproduct(rt.quotient.delta, once, d[0], d[1]);
        Vec2 direct;
        for (const auto& [t, c] : rt.ambient.delta(x, d[0], d[1]))
          for (const auto& [a, c1] : red(t[0]))
            for (const auto& [b, c2] : red(t[1])) direct.add(Tensor{a, b}, c * c1 * c2);
        if (full != direct) {
          fail(rep, "reducing before Delta changes the result",
               Json{{"x", encode(x)}, {"S", set_json(d[0])}, {"T", set_json(d[1])}});
          return rep;
        }
      }
    }
    for (const auto& d : enumerate_decompositions(ground, 2))
      for (const auto& x : rt.ambient.species.basis(d[0]))
        for (const auto& y : rt.ambient.species.basis(d[1])) {
          ++rep.cases;
          Vec direct = red(rt.ambient.mu(x, y));
          Vec early = product(rt.quotient.mu, red(x), red(y));
          if (direct != early) {
            fail(rep, "reducing before mu changes the result",
                 Json{{"x", encode(x)}, {"y", encode(y)}, {"direct", encode(direct)},
                      {"early", encode(early)}});
            return rep;
          }
        }
  }
  return rep;
}

Report check_quotient_hopf(const RTee& rt, std::size_t n_max) {
  return combine("quotient Hopf monoid", rt.quotient.species.name(),
                 {check_associativity(rt.quotient.monoid(), n_max),
                  check_coassociativity(rt.quotient.comonoid(), n_max),
                  check_compatibility(rt.quotient, n_max), check_antipode(rt.quotient, n_max)});
}

SpeciesMap hat_f(const RTee& rt) {
  HatF f(rt.data);
  return SpeciesMap{"hat_f", rt.upper.hopf.species, rt.lower.hopf.species,
                    [f](const Term& x) { return f(x); }, {}};
}

SpeciesMap port_lower(const RTee& rt) {
  HatF f(rt.data);
  std::size_t r = rt.r;
  return SpeciesMap{"port_" + std::to_string(r), rt.upper.hopf.species, rt.quotient.species,
                    [f, r, delta = rt.upper.hopf.delta](const Term& x) {
                      LabelSet large = blocks_sized(x, r, x.ground().size() + 1);
                      Vec out;
                      for (const auto& [t, c] : delta(x, large, x.ground().minus(large)))
                        for (const auto& [v, d] : f(t[1])) out.add(Term::cauchy(t[0], v), c * d);
                      return out;
                    },
                    {}};
}

SpeciesMap port_upper(const RTee& rt) {
  HatF f(rt.data);
  return SpeciesMap{"port^" + std::to_string(rt.r), rt.quotient.species, rt.lower.hopf.species,
                    [f, mu = rt.lower.hopf.mu](const Term& x) {
                      return product(mu, f(x.left()), Vec(x.right()));
                    },
                    {}};
}

SpeciesMap port_between(const RTee& rt_r, const RTee& rt_s) {
  if (rt_r.r >= rt_s.r)
    throw PreconditionError("port^r_s needs r < s, got r=" + std::to_string(rt_r.r) +
                            ", s=" + std::to_string(rt_s.r));
  HatF f(rt_r.data);
  std::size_t s = rt_s.r;
  return SpeciesMap{
      "port^" + std::to_string(rt_r.r) + "_" + std::to_string(s), rt_r.quotient.species,
      rt_s.quotient.species,
      [f, s, delta = rt_r.upper.hopf.delta, mu = rt_r.lower.hopf.mu](const Term& x) {
        const Term& u = x.left();
        LabelSet large = blocks_sized(u, s, u.ground().size() + 1);
        Vec out;
        for (const auto& [t, c] : delta(u, large, u.ground().minus(large)))
          for (const auto& [v, d] : product(mu, f(t[1]), Vec(x.right())))
            out.add(Term::cauchy(t[0], v), c * d);
        return out;
      },
      {}};
}

Report check_port_morphisms(const RTee& rt, std::size_t n_max) {
  return combine("port morphisms", rt.quotient.species.name(),
                 {check_bimonoid_morphism(hat_f(rt), rt.upper.hopf, rt.lower.hopf, n_max),
                  check_bimonoid_morphism(port_lower(rt), rt.upper.hopf, rt.quotient, n_max),
                  check_bimonoid_morphism(port_upper(rt), rt.quotient, rt.lower.hopf, n_max)});
}

Report check_port_between(const RTee& rt_r, const RTee& rt_s, std::size_t n_max) {
  return check_bimonoid_morphism(port_between(rt_r, rt_s), rt_r.quotient, rt_s.quotient, n_max);
}

Report check_port_identities(const RTee& rt_r, const RTee& rt_s, std::size_t n_max) {
  SpeciesMap lower_r = port_lower(rt_r);
  return combine(
      "port identities", rt_r.quotient.species.name(),
      {check_equal_maps(compose(port_upper(rt_r), lower_r), hat_f(rt_r), n_max),
       check_equal_maps(compose(port_between(rt_r, rt_s), lower_r), port_lower(rt_s), n_max)});
}

Report check_surjectivity_transfer(const RTee& rt, std::size_t n_max) {
  Report hf = check_surjective(hat_f(rt), n_max);
  if (!hf.passed) {
    Report r = start("surjectivity transfer", rt, n_max);
    r.message = "hat_f is not surjective; nothing to transfer";
    return r;
  }
  return combine("surjectivity transfer", rt.quotient.species.name(),
                 {hf, check_surjective(port_lower(rt), n_max),
                  check_surjective(port_upper(rt), n_max)});
}

Report check_collapses(const InterpolationData& data, std::size_t n_max) {
  RTee first = build_rtee(1, data);
  RTee last = build_rtee(n_max + 1, data);
  SpeciesMap down = port_lower(first);
  SpeciesMap up = port_upper(last);
  return combine("collapses", "r=1 and r=" + std::to_string(n_max + 1),
                 {check_injective(down, n_max), check_surjective(down, n_max),
                  check_bimonoid_morphism(down, first.upper.hopf, first.quotient, n_max),
                  check_injective(up, n_max), check_surjective(up, n_max),
                  check_bimonoid_morphism(up, last.quotient, last.lower.hopf, n_max)});
}

Report check_hat_f_is_f(const RTee& rt, std::size_t n_max) {
  SpeciesMap f = f_tau_theta(rt.upper, rt.lower, rt.data.tau, rt.data.theta, 0);
  return check_equal_maps(hat_f(rt), f, n_max);
}

}  // namespace species
