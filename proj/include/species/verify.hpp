#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "species/structure.hpp"
#include "species/term_json.hpp"

namespace species {

/// Result of an exhaustive law check over canonical label sets 1..n, n ≤ n_max.
/// A failing report carries the first counterexample found.
struct Report {
  std::string law;
  std::string subject;
  bool passed = true;
  std::size_t n_max = 0;
  std::size_t cases = 0;
  std::string message;
  std::optional<Json> witness;

  std::string to_text() const;
  Json to_json() const;
  Certificate certificate() const { return {passed, n_max, passed ? "" : message}; }
};

// Conjunction of several reports; the first failure supplies message and witness.
Report combine(std::string law, std::string subject, const std::vector<Report>& parts);

// All checks below run over I = {1..n} for n = 0..n_max.

Report check_associativity(const Monoid& m, std::size_t n_max);
// Positive comonoids are checked on splits into nonempty parts only.
Report check_coassociativity(const Comonoid& c, std::size_t n_max);
Report check_compatibility(const Bimonoid& h, std::size_t n_max);
Report check_commutativity(const Monoid& m, std::size_t n_max);
Report check_cocommutativity(const Comonoid& c, std::size_t n_max);
Report check_linearized_product(const Monoid& m, std::size_t n_max);
Report check_linearized_coproduct(const Comonoid& c, std::size_t n_max);
// ρ^I_I = id and ρ^V_U ∘ ρ^I_V = ρ^I_U.
Report check_restriction_axioms(const Species& s, const RestrictionFn& rho, std::size_t n_max);
// ρ^I_U(μ(x, y)) = μ(ρ^S_{U∩S}(x), ρ^T_{U∩T}(y)).
Report check_coherence(const Monoid& m, const RestrictionFn& rho, std::size_t n_max);
// Δ_{S,T}(x) = ρ_S(x) ⊗ ρ_T(x).
Report check_coproduct_from_restrictions(const Comonoid& c, std::size_t n_max);
// Naturality of μ and Δ under adjacent transpositions of I.
Report check_naturality(const Bimonoid& h, std::size_t n_max);
// For linearized b with Δ(x) = λ(x) ⊗ ρ(x): over all X ⊢ I, R ⊔ S ⊔ T = I,
// ρ^{X^{RS}}_{X^S} λ^X_{X^{RS}} = λ^{X^{ST}}_{X^S} ρ^X_{X^{ST}}.
Report check_restriction_identity(const Bimonoid& b, std::size_t n_max);

/// Antipode of a connected bimonoid by degree recursion
///   s(x) = −Σ_{S ⊔ T = I, S ≠ I} μ(s(x'_S), x''_T),
/// memoized per basis term.
class AntipodeSolver {
 public:
  explicit AntipodeSolver(Bimonoid h);
  Vec operator()(const Term& x);
  Vec operator()(const Vec& v);

 private:
  Bimonoid h_;
  std::map<Term, Vec> memo_;
};

// (f * g)(x) = Σ_{S ⊔ T = I} μ(f(x'), g(x'')).
Vec convolution(const LinearFn& f, const LinearFn& g, const Bimonoid& h, const Term& x);

// s * id = id * s = ι∘ε on every basis term.
Report check_antipode(const Bimonoid& h, std::size_t n_max);
Report check_antipode_involution(const Bimonoid& h, std::size_t n_max);

// --- maps ---------------------------------------------------------------------

// Every image lies in the span of the target basis on the same set.
Report check_lands_in(const SpeciesMap& f, std::size_t n_max);
Report check_monoid_morphism(const SpeciesMap& f, const Monoid& source, const Monoid& target,
                             std::size_t n_max);
// Positive sources are checked on nonempty splits only.
Report check_comonoid_morphism(const SpeciesMap& f, const Comonoid& source,
                               const Comonoid& target, std::size_t n_max);
// f sends basis terms to basis terms and f ∘ ρ = ρ ∘ f.
Report check_restriction_morphism(const SpeciesMap& f, const RestrictionFn& source,
                                  const RestrictionFn& target, std::size_t n_max);
// Rank of the images equals the source dimension.
Report check_injective(const SpeciesMap& f, std::size_t n_max);
// Rank of the images equals the target dimension.
Report check_surjective(const SpeciesMap& f, std::size_t n_max);
// f(x) = g(x) on every basis term.
Report check_equal_maps(const SpeciesMap& f, const SpeciesMap& g, std::size_t n_max);

// Runs the bimonoid, linearization, (co)commutativity and restriction checks
// and records them on h.
void certify(Bimonoid& h, std::size_t n_max);
void certify(Comonoid& c, std::size_t n_max);

}  // namespace species
