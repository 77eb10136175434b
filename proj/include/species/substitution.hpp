#pragma once

#include <span>
#include <utility>
#include <vector>

#include "species/structure.hpp"

namespace species {

// b|↓_{X_T}: restrict the outer term to the blocks X^T meeting T, then rename
// each block to its intersection with T.
Term restrict_down(const RestrictionFn& rho, const Term& outer, const SetPartition& x,
                   const LabelSet& t);

// Inner terms destined for the S side and the T side.
using InnerSplit = std::pair<std::vector<Term>, std::vector<Term>>;

// Blocks inside S or T pass through; blocks meeting both are split by Δ^p.
// Each side lists its inner terms in block order.
LinComb<InnerSplit> tilde_delta(const CoproductFn& delta_p, std::span<const Term> inners,
                                const LabelSet& s, const LabelSet& t);

// μ^b on the outer terms, inner tuples concatenated.
Vec tee_mu(const ProductFn& mu_b, const Term& x, const Term& y);

// Σ (b|↓_{X_S} ⊗ p_{(X_S)}) ⊗ (b|↓_{X_T} ⊗ p_{(X_T)}).
Vec2 tee_delta(const RestrictionFn& rho_b, const CoproductFn& delta_p, const Term& x,
               const LabelSet& s, const LabelSet& t);

// ρ^I_U on composites: b|↓_{X_U} with the inner terms restricted blockwise.
Term tee_restrict(const RestrictionFn& rho_b, const RestrictionFn& rho_p, const Term& x,
                  const LabelSet& u);

// The comonoid on b ∘ p built from the restrictions of b and the coproduct
// of p (positive). Carries restrictions when p does.
Comonoid substitution_comonoid(const Comonoid& b, const Comonoid& p);

/// 𝒯^b(p): the bimonoid on b ∘ p.
struct Tee {
  Bimonoid b;
  Comonoid p;
  Bimonoid hopf;
};

// Refuses with HypothesisError naming the first missing hypothesis, checked in
// the order: connected, cocommutative, linearized, restrictions (coproduct
// from restrictions, coherence, restriction axioms), bimonoid axioms; then p
// positive and coassociative.
Tee build_tee(const Bimonoid& b, const Comonoid& p);

}  // namespace species
