#pragma once

#include <cstddef>
#include <vector>

#include "species/substitution.hpp"
#include "species/verify.hpp"

namespace species {

/// The six inputs of an interpolation family: τ: b → d a bimonoid map
/// intertwining restrictions, θ: p → q a map of positive comonoids, d
/// commutative.
struct InterpolationData {
  Bimonoid b;
  Bimonoid d;
  Comonoid p;
  Comonoid q;
  SpeciesMap tau;
  SpeciesMap theta;
};

// (G, E, L₊, cyc, τ_GE, θ_Lcyc); L₊ carries the trivial coproduct here so
// that θ is a comonoid map.
InterpolationData flagship_G_E_L_cyc();
// (L, E, G₊, E₊, τ_LE, forget_edges).
InterpolationData flagship_L_E_G_E();

// ĥf: b_X ⊗ p_(X) ↦ (Π_i τ(b|_{X^i})) ⊗ θ(p_(X)), where X^i are the blocks of
// size i and the product is taken in d.
class HatF {
 public:
  explicit HatF(const InterpolationData& data);
  Vec operator()(const Term& x) const;

 private:
  RestrictionFn rho_b_;
  ProductFn mu_d_;
  Term unit_d_;
  SpeciesMap tau_, theta_;
};

// Moves every block of size < r out of the 𝒯^b(p) coordinate:
//   b ⊗ p_(X) ⊗̇ d ⊗ q_(Y) ↦ b|_{X'} ⊗ p_(X') ⊗̇ τ(b|_{X''}) d ⊗ θ(p_(X'')) q_(Y),
// X' the large blocks and X'' the small ones. Terms without small blocks are fixed.
class Reducer {
 public:
  Reducer(std::size_t r, const InterpolationData& data);
  Vec operator()(const Term& x) const;
  Vec operator()(const Vec& v) const;
  // True iff the 𝒯^b(p) coordinate has a block of size < r.
  bool has_small_block(const Term& x) const;

 private:
  std::size_t r_;
  RestrictionFn rho_b_;
  ProductFn mu_d_;
  SpeciesMap tau_, theta_;
};

/// r-𝒯^{b,d}(p,q): the quotient of the ambient 𝒯^b(p) · 𝒯^d(q_{<r}) by the
/// span of x − reduce(x), carried by (b ∘ p_{≥r}) · (d ∘ q_{<r}).
struct RTee {
  std::size_t r;
  InterpolationData data;
  Tee upper;        // 𝒯^b(p)
  Tee lower;        // 𝒯^d(q)
  Tee lower_small;  // 𝒯^d(q_{<r})
  Bimonoid ambient;
  Bimonoid quotient;  // on the carrier, with μ = reduce∘μ and Δ = (reduce⊗reduce)∘Δ
  Reducer reduce;
};

// Throws PreconditionError for r = 0 and HypothesisError when d is not
// commutative, τ lacks restriction/bimonoid certificates or θ lacks a
// comonoid certificate.
RTee build_rtee(std::size_t r, const InterpolationData& data);

// One generator x − reduce(x) per ambient basis term with a small block.
std::vector<Vec> ideal_generators(const RTee& rt, const LabelSet& ground);

// h·x and x·h in the span of the generators, for ambient h and generators x.
Report check_ideal(const RTee& rt, std::size_t n_max);
// Δ(x) ∈ ambient ⊗ span + span ⊗ ambient, by elimination over the tensor basis.
Report check_coideal(const RTee& rt, std::size_t n_max);

struct DimRow {
  std::size_t n;
  std::size_t ambient;
  std::size_t generators_rank;
  std::size_t carrier;
};
std::vector<DimRow> quotient_dims(const RTee& rt, std::size_t n_max);
// dim ambient − rank = dim carrier in every degree.
Report check_quotient_dims(const RTee& rt, std::size_t n_max);

// reduce∘reduce = reduce, and reducing before μ or Δ does not change the
// reduced result.
Report check_confluence(const RTee& rt, std::size_t n_max);

// The quotient satisfies the bimonoid axioms and has an antipode.
Report check_quotient_hopf(const RTee& rt, std::size_t n_max);

// ĥf: 𝒯^b(p) → 𝒯^d(q).
SpeciesMap hat_f(const RTee& rt);
// port_r = (id ⊗ ĥf)∘Δ_{large, small}: 𝒯^b(p) → carrier_r.
SpeciesMap port_lower(const RTee& rt);
// port^r = μ∘(ĥf ⊗ id): carrier_r → 𝒯^d(q).
SpeciesMap port_upper(const RTee& rt);
// port^r_s: carrier_r → carrier_s; moves the blocks of size in [r, s).
// Throws PreconditionError unless r < s.
SpeciesMap port_between(const RTee& rt_r, const RTee& rt_s);

// ĥf, port_r and port^r are bimonoid morphisms.
Report check_port_morphisms(const RTee& rt, std::size_t n_max);
// port^r_s is a bimonoid morphism.
Report check_port_between(const RTee& rt_r, const RTee& rt_s, std::size_t n_max);
// port^r ∘ port_r = ĥf and port^r_s ∘ port_r = port_s.
Report check_port_identities(const RTee& rt_r, const RTee& rt_s, std::size_t n_max);
// When ĥf is surjective up to n_max, port_r and port^r are too.
Report check_surjectivity_transfer(const RTee& rt, std::size_t n_max);
// At r = 1 port_r is an isomorphism 𝒯^b(p) ≅ carrier; at r = n_max + 1
// port^r is an isomorphism carrier ≅ 𝒯^d(q) in degrees ≤ n_max.
Report check_collapses(const InterpolationData& data, std::size_t n_max);
// ĥf = f_{τ,θ}; only meaningful when d = E.
Report check_hat_f_is_f(const RTee& rt, std::size_t n_max);

}  // namespace species
