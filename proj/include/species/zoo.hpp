#pragma once

#include "species/structure.hpp"

namespace species {

// Bases.
std::vector<Term> all_orders(const LabelSet& ground);
std::vector<Term> all_graphs(const LabelSet& ground);
std::vector<Term> all_posets(const LabelSet& ground);
std::vector<Term> all_cycles(const LabelSet& ground);

// Restriction of a star, order, graph or poset to U ⊆ ground (induced structure).
Term restrict_term(const Term& x, const LabelSet& u);

// Hopf monoids, certified at |I| ≤ 4 on first use.
const Bimonoid& hopf_E();      // ∗_S · ∗_T = ∗_{S⊔T}
const Bimonoid& hopf_L();      // concatenation / restriction
const Bimonoid& hopf_G();      // disjoint union / induced subgraph
const Bimonoid& hopf_Poset();  // disjoint union / induced subposet
const Bimonoid& hopf_One();    // the unit species, concentrated on ∅

// Positive comonoids.
// Δ_{S,T} = 0 whenever S and T are both nonempty. Certified.
Comonoid trivial_comonoid(const Species& s);
const Comonoid& comonoid_cyc();        // cycles, trivial coproduct
const Comonoid& comonoid_L_trivial();  // L₊ with the trivial coproduct, named "Ltriv+"
Comonoid positive_part(const Bimonoid& h);

// L with concatenation and Δ_{S,T}(l) = l|_S ⊗ reverse^{|S|}(l|_T).
// Coassociative and linearized; neither cocommutative nor compatible.
Bimonoid twisted_L();

// Maps, each certified for the properties it has.
const SpeciesMap& tau_GE();      // g ↦ ∗_I
const SpeciesMap& tau_LE();      // l ↦ ∗_I
const SpeciesMap& alpha();       // ∗_I ↦ antichain on I
const SpeciesMap& lambda();      // ∗_I ↦ 1/|I|! Σ chains
const SpeciesMap& theta_Lcyc();  // Ltriv+ → cyc, the obvious cycle
const SpeciesMap& forget_edges();  // G₊ → E₊
const SpeciesMap& forget_order();  // L₊ → E₊
const SpeciesMap& alpha_plus();    // E₊ → Pos₊
const SpeciesMap& lambda_plus();   // E₊ → Pos₊

// The unique basis term on {label}; HypothesisError if there is not exactly one.
Term distinguished_singleton(const Species& s, const Label& label);

}  // namespace species
