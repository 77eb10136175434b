#include "species/structure.hpp"

#include <algorithm>
#include <mutex>

#include "species/errors.hpp"

namespace species {

struct Species::Impl {
  std::string name;
  Shape shape;
  Enumerator enumerate;
  mutable std::mutex mutex;
  mutable std::map<LabelSet, std::vector<Term>> cache;
};

Species::Species(std::string name, Shape shape, Enumerator enumerate)
    : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->shape = std::move(shape);
  impl_->enumerate = std::move(enumerate);
}

const std::string& Species::name() const noexcept { return impl_->name; }
const Shape& Species::shape() const noexcept { return impl_->shape; }

const std::vector<Term>& Species::basis(const LabelSet& ground) const {
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->cache.find(ground);
    if (it != impl_->cache.end()) return it->second;
  }
  // Enumerate without holding the lock: enumerators recurse into other species.
  auto terms = impl_->enumerate(ground);
  std::sort(terms.begin(), terms.end());
  if (std::adjacent_find(terms.begin(), terms.end()) != terms.end())
    throw DomainError("species " + impl_->name + " enumerated a duplicate term");
  std::lock_guard lock(impl_->mutex);
  return impl_->cache.try_emplace(ground, std::move(terms)).first->second;
}

bool Species::contains(const Term& t) const {
  const auto& b = basis(t.ground());
  return std::binary_search(b.begin(), b.end(), t);
}

bool Truncation::keeps(std::size_t size) const {
  switch (mode) {
    case TruncMode::Exactly: return size == n;
    case TruncMode::Positive: return size > 0;
    case TruncMode::Below: return size < n;
    case TruncMode::AtLeast: return size >= n;
  }
  return false;
}

std::string Truncation::suffix() const {
  switch (mode) {
    case TruncMode::Exactly: return "_" + std::to_string(n);
    case TruncMode::Positive: return "+";
    case TruncMode::Below: return "_<" + std::to_string(n);
    case TruncMode::AtLeast: return "_>=" + std::to_string(n);
  }
  return "";
}

Species truncate(const Species& s, Truncation t) {
  return Species(s.name() + t.suffix(), s.shape(), [s, t](const LabelSet& ground) {
    if (!t.keeps(ground.size())) return std::vector<Term>{};
    return s.basis(ground);
  });
}

const char* property_name(Property p) {
  switch (p) {
    case Property::Connected: return "connected";
    case Property::Associative: return "associative";
    case Property::Coassociative: return "coassociative";
    case Property::Compatible: return "compatible";
    case Property::Commutative: return "commutative";
    case Property::Cocommutative: return "cocommutative";
    case Property::LinearizedProduct: return "linearized product";
    case Property::LinearizedCoproduct: return "linearized coproduct";
    case Property::RestrictionAxioms: return "restriction axioms";
    case Property::Coherent: return "coherence";
    case Property::CoproductFromRestrictions: return "coproduct from restrictions";
    case Property::Antipode: return "antipode";
    case Property::MonoidMorphism: return "monoid morphism";
    case Property::ComonoidMorphism: return "comonoid morphism";
    case Property::RestrictionMorphism: return "restriction morphism";
    case Property::Injective: return "injective";
  }
  return "?";
}

Term Bimonoid::unit() const {
  const auto& b = species.basis({});
  if (b.size() != 1) throw PreconditionError(species.name() + " is not connected");
  return b.front();
}

Vec SpeciesMap::operator()(const Vec& v) const {
  return apply_linear<Term>(v, [&](const Term& t) { return apply(t); });
}

SpeciesMap identity_map(const Species& s) {
  SpeciesMap id{"id_" + s.name(), s, s, [](const Term& t) { return Vec(t); }, {}};
  for (Property p : {Property::MonoidMorphism, Property::ComonoidMorphism,
                     Property::RestrictionMorphism, Property::Injective})
    id.certs.record(p, {true, 0, "identity"});
  return id;
}

SpeciesMap compose(const SpeciesMap& g, const SpeciesMap& f) {
  return {g.name + "*" + f.name, f.source, g.target,
          [g, f](const Term& t) { return g(f(t)); }, {}};
}

CoproductFn coproduct_from_restrictions(RestrictionFn rho) {
  return [rho = std::move(rho)](const Term& x, const LabelSet& s, const LabelSet& t) {
    return Vec2(Tensor{rho(x, s), rho(x, t)});
  };
}

Comonoid comonoid_from_restrictions(const Species& s, RestrictionFn rho) {
  return {s, coproduct_from_restrictions(rho), rho, {}};
}

Comonoid truncate(const Comonoid& c, Truncation t) {
  return {truncate(c.species, t), c.delta, c.restriction, c.certs};
}

Vec product(const ProductFn& mu, const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add_scaled(mu(a, b), c * d);
  return out;
}

Vec2 coproduct(const CoproductFn& delta, const Vec& x, const LabelSet& s, const LabelSet& t) {
  Vec2 out;
  for (const auto& [a, c] : x) out.add_scaled(delta(a, s, t), c);
  return out;
}

Vec2 map_factor(const Vec2& v, std::size_t i, const LinearFn& f) {
  Vec2 out;
  for (const auto& [tensor, c] : v) {
    for (const auto& [image, d] : f(tensor[i])) {
      Tensor t = tensor;
      t[i] = image;
      out.add(t, c * d);
    }
  }
  return out;
}

LinComb<Tensor> split_factor(const LinComb<Tensor>& v, std::size_t i, const CoproductFn& delta,
                             const LabelSet& s, const LabelSet& t) {
  LinComb<Tensor> out;
  for (const auto& [tensor, c] : v) {
    for (const auto& [pieces, d] : delta(tensor[i], s, t)) {
      Tensor u(tensor.begin(), tensor.begin() + static_cast<std::ptrdiff_t>(i));
      u.insert(u.end(), pieces.begin(), pieces.end());
      u.insert(u.end(), tensor.begin() + static_cast<std::ptrdiff_t>(i) + 1, tensor.end());
      out.add(u, c * d);
    }
  }
  return out;
}

LinComb<Tensor> merge_factors(const LinComb<Tensor>& v, std::size_t i, const ProductFn& mu) {
  LinComb<Tensor> out;
  for (const auto& [tensor, c] : v) {
    for (const auto& [prod, d] : mu(tensor[i], tensor[i + 1])) {
      Tensor u(tensor.begin(), tensor.begin() + static_cast<std::ptrdiff_t>(i));
      u.push_back(prod);
      u.insert(u.end(), tensor.begin() + static_cast<std::ptrdiff_t>(i) + 2, tensor.end());
      out.add(u, c * d);
    }
  }
  return out;
}

Vec2 swap_factors(const Vec2& v) {
  Vec2 out;
  for (const auto& [t, c] : v) out.add(Tensor{t[1], t[0]}, c);
  return out;
}

Vec2 product_of_tensors(const ProductFn& mu, const Vec2& x, const Vec2& y) {
  Vec2 out;
  for (const auto& [a, c] : x) {
    for (const auto& [b, d] : y) {
      Vec left = mu(a[0], b[0]);
      Vec right = mu(a[1], b[1]);
      for (const auto& [l, e] : left)
        for (const auto& [r, f] : right) out.add(Tensor{l, r}, c * d * e * f);
    }
  }
  return out;
}

}  // namespace species
