#pragma once

#include <cstddef>

#include "species/substitution.hpp"
#include "species/verify.hpp"

namespace species {

// μ and Δ intertwining, checked together.
Report check_bimonoid_morphism(const SpeciesMap& f, const Bimonoid& source, const Bimonoid& target,
                               std::size_t n_max);

/// f_{τ,θ}: b_X ⊗ p_(X) ↦ τ(b_X) ⊗ θ(p_(X)), θ applied blockwise.
/// τ must carry restriction, monoid and comonoid morphism certificates and θ
/// a comonoid morphism certificate; otherwise HypothesisError names the first
/// one missing. The result is checked as a bimonoid morphism up to check_n
/// and carries that certificate.
SpeciesMap f_tau_theta(const Tee& source, const Tee& target, const SpeciesMap& tau,
                       const SpeciesMap& theta, std::size_t check_n = 4);

struct TeeMorphism {
  Tee source;
  Tee target;
  SpeciesMap map;
};

// 𝒯(p) → 𝒮(p), forgetting the order on the blocks: f_{τ_LE, id}.
TeeMorphism abelianization(const Comonoid& p, std::size_t check_n = 4);

/// 𝒯^{𝒯^b(p)}(q) ≅ 𝒯^b(p ∘ q), regrouping nested partitions.
struct AssocIso {
  Tee inner;   // 𝒯^b(p), certified so it can serve as an outer bimonoid
  Tee source;  // 𝒯^{𝒯^b(p)}(q)
  Tee target;  // 𝒯^b(p ∘ q)
  SpeciesMap forward;
  SpeciesMap backward;
};

// p needs restrictions (they give the comonoid on p ∘ q); q must be positive.
// Hypotheses on 𝒯^b(p) are certified at certify_n and enforced by build_tee.
AssocIso assoc_iso(const Bimonoid& b, const Comonoid& p, const Comonoid& q,
                   std::size_t certify_n = 3);

// (𝒳, ((β, π_i)), q_C) ↦ (β relabeled onto the unions Y_i, (π_i, q_C)_{C ∈ 𝒜_i}).
Term assoc_regroup(const Term& z);
Term assoc_ungroup(const Term& y);

// Bijection on bases (basis to basis, inverse both ways, equal dimensions)
// and bimonoid morphism.
Report check_assoc_iso(const AssocIso& iso, std::size_t n_max);

/// χ: b ∘ h₊ → h for b ∈ {L, E}: the iterated product of the blocks, in the
/// order of the outer linear order (L) or in block order (E). The E case
/// needs h certified commutative (HypothesisError otherwise).
enum class ChiBase { L, E };
Vec chi_eval(ChiBase base, const Bimonoid& h, const Term& x);
SpeciesMap chi_map(ChiBase base, const Bimonoid& h);
// Both squares: χ as a bimonoid morphism 𝒯^b(h₊) → h.
Report check_chi_squares(ChiBase base, const Bimonoid& h, std::size_t n_max);

// p → 𝒯^b(p)₊: the distinguished b-term on the single block I, decorated by x.
SpeciesMap embed_p(const Tee& tee);
// b → 𝒯^b(p): singleton blocks, each decorated by the distinguished p-term.
SpeciesMap embed_b(const Tee& tee);
// Injective comonoid morphism p → 𝒯^b(p)₊.
Report check_embed_p(const Tee& tee, std::size_t n_max);
// Injective bimonoid morphism b → 𝒯^b(p).
Report check_embed_b(const Tee& tee, std::size_t n_max);

// The poset on I induced by an outer poset on the blocks and a poset on each
// block: x < y iff x < y inside a common block, or block(x) < block(y).
Term poset_collapse(const Term& x);
// 𝒯^{Pos}(Pos₊) → Pos.
SpeciesMap poset_collapse_map(const Tee& pos_pos);

/// Two bimonoid surjections O₁ = 𝒯^{Pos}(E₊) → Pos, collapse ∘ f_{id,α₊} and
/// collapse ∘ f_{id,λ₊}, and the inclusion Pos → O₁ they split.
struct PosetSplittings {
  Tee o1;
  Tee pos_pos;
  SpeciesMap collapse;
  SpeciesMap via_alpha;
  SpeciesMap via_lambda;
  SpeciesMap inclusion;
};
PosetSplittings poset_splittings(std::size_t check_n = 3);
// s is a bimonoid morphism O₁ → Pos, surjective, and s ∘ inclusion = id.
Report check_splitting(const PosetSplittings& ps, const SpeciesMap& s, std::size_t n_max);

}  // namespace species
