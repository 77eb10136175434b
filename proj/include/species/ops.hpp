#pragma once

#include "species/structure.hpp"

namespace species {

// (p + q)[I] = p[I] ⊕ q[I]; terms are tagged 0 (left) or 1 (right).
Species sum_species(const Species& p, const Species& q);
// (p × q)[I] = p[I] ⊗ q[I].
Species hadamard_species(const Species& p, const Species& q);
// (p · q)[I] = ⊕_{S⊔T=I} p[S] ⊗ q[T].
Species cauchy_species(const Species& p, const Species& q);
// (p ∘ q)[I] = ⊕_{X⊢I} p[X] ⊗ ⊗_{B∈X} q[B], with (p ∘ q)[∅] = p[∅].
// Throws PreconditionError unless q is positive.
Species substitute_species(const Species& p, const Species& q);

// Coordinatewise product and coproduct on h₁ · h₂. Both must be connected.
Bimonoid cauchy_bimonoid(const Bimonoid& h1, const Bimonoid& h2);

}  // namespace species
