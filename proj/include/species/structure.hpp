#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "species/term.hpp"
#include "species/term_json.hpp"

namespace species {

/// A vector species given by a canonical basis on every finite label set.
/// Relabeling is structural on terms, so only the enumerator is needed.
/// Bases are memoized behind a mutex; the object is observationally pure.
class Species {
 public:
  using Enumerator = std::function<std::vector<Term>(const LabelSet&)>;

  Species(std::string name, Shape shape, Enumerator enumerate);

  const std::string& name() const noexcept;
  const Shape& shape() const noexcept;

  // Sorted canonical basis of the component on I.
  const std::vector<Term>& basis(const LabelSet& ground) const;
  std::size_t dim(std::size_t n) const { return basis(canonical_labels(n)).size(); }
  bool contains(const Term& t) const;

  bool connected() const { return basis({}).size() == 1; }
  bool positive() const { return basis({}).empty(); }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

enum class TruncMode { Exactly, Positive, Below, AtLeast };
struct Truncation {
  TruncMode mode;
  std::size_t n = 0;  // unused for Positive
  bool keeps(std::size_t size) const;
  std::string suffix() const;  // "_3", "+", "_<2", "_>=2"
};

Species truncate(const Species& s, Truncation t);

// --- structure maps -----------------------------------------------------------

// μ_{S,T}: x on S, y on T (S, T read from the terms' grounds).
using ProductFn = std::function<Vec(const Term& x, const Term& y)>;
// Δ_{S,T}: x on S ⊔ T; results are two-factor tensors.
using CoproductFn = std::function<Vec2(const Term& x, const LabelSet& s, const LabelSet& t)>;
// ρ^I_U: x on I, U ⊆ I.
using RestrictionFn = std::function<Term(const Term& x, const LabelSet& u)>;
// A linear map given on basis terms.
using LinearFn = std::function<Vec(const Term& x)>;

enum class Property {
  Connected,
  Associative,
  Coassociative,
  Compatible,
  Commutative,
  Cocommutative,
  LinearizedProduct,
  LinearizedCoproduct,
  RestrictionAxioms,
  Coherent,
  CoproductFromRestrictions,
  Antipode,
  // properties of maps
  MonoidMorphism,
  ComonoidMorphism,
  RestrictionMorphism,
  Injective,
};

const char* property_name(Property p);

/// The outcome of an exhaustive check, recorded with the bound it ran at.
struct Certificate {
  bool holds = false;
  std::size_t n_max = 0;
  std::string detail;
};

class CertificateSet {
 public:
  void record(Property p, Certificate c) { certs_[p] = std::move(c); }
  bool holds(Property p) const {
    auto it = certs_.find(p);
    return it != certs_.end() && it->second.holds;
  }
  const Certificate* find(Property p) const {
    auto it = certs_.find(p);
    return it == certs_.end() ? nullptr : &it->second;
  }
  const std::map<Property, Certificate>& all() const noexcept { return certs_; }

 private:
  std::map<Property, Certificate> certs_;
};

struct Monoid {
  Species species;
  ProductFn mu;
  CertificateSet certs;
};

struct Comonoid {
  Species species;
  CoproductFn delta;
  std::optional<RestrictionFn> restriction;
  CertificateSet certs;
};

struct Bimonoid {
  Species species;
  ProductFn mu;
  CoproductFn delta;
  std::optional<RestrictionFn> restriction;
  CertificateSet certs;

  Monoid monoid() const { return {species, mu, certs}; }
  Comonoid comonoid() const { return {species, delta, restriction, certs}; }
  // The basis element of h[∅]; throws PreconditionError unless connected.
  Term unit() const;
};

/// A linear natural map between species, defined on basis terms.
struct SpeciesMap {
  std::string name;
  Species source;
  Species target;
  LinearFn apply;
  CertificateSet certs;

  Vec operator()(const Term& x) const { return apply(x); }
  Vec operator()(const Vec& v) const;
};

// Carries every map certificate (they hold for any structure on s).
SpeciesMap identity_map(const Species& s);
// g ∘ f
SpeciesMap compose(const SpeciesMap& g, const SpeciesMap& f);

// Δ_{S,T}(x) = ρ_S(x) ⊗ ρ_T(x).
CoproductFn coproduct_from_restrictions(RestrictionFn rho);
Comonoid comonoid_from_restrictions(const Species& s, RestrictionFn rho);

// Truncations keep the structure maps and inherit certificates (the checks
// only ever visit sizes the truncation keeps).
Comonoid truncate(const Comonoid& c, Truncation t);

// --- linear extensions ----------------------------------------------------

Vec product(const ProductFn& mu, const Vec& x, const Vec& y);
Vec2 coproduct(const CoproductFn& delta, const Vec& x, const LabelSet& s, const LabelSet& t);
// Applies f to factor i of every tensor.
Vec2 map_factor(const Vec2& v, std::size_t i, const LinearFn& f);
// Replaces factor i by the two factors of Δ_{S,T}.
LinComb<Tensor> split_factor(const LinComb<Tensor>& v, std::size_t i, const CoproductFn& delta,
                             const LabelSet& s, const LabelSet& t);
// Replaces factors i, i+1 by their product.
LinComb<Tensor> merge_factors(const LinComb<Tensor>& v, std::size_t i, const ProductFn& mu);
// u ⊗ v ↦ v ⊗ u on two-factor tensors.
Vec2 swap_factors(const Vec2& v);
// (a ⊗ b), (c ⊗ d) ↦ (a·c) ⊗ (b·d)
Vec2 product_of_tensors(const ProductFn& mu, const Vec2& x, const Vec2& y);

}  // namespace species
