#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "species/labels.hpp"
#include "species/lincomb.hpp"

namespace species {

enum class Kind : unsigned char {
  Star,       // the unique E-structure ∗_I
  Order,      // linear order
  Cycle,      // directed cycle, minimum label first
  Graph,      // simple graph
  Poset,      // strict partial order, stored transitively closed
  Tagged,     // summand of a sum species
  Pair,       // Hadamard product: two structures on the same set
  Cauchy,     // Cauchy product: structures on S and on T
  Composite,  // substitution: outer structure on blocks, inner per block
};

const char* kind_name(Kind k);

using LabelPair = std::pair<Label, Label>;

/// Immutable canonical structure on a finite label set. Copies share storage.
class Term {
 public:
  Term();  // ∗ on the empty set
  static Term star(LabelSet ground);
  static Term order(std::vector<Label> sequence);
  static Term cycle(std::vector<Label> sequence);
  // Edges are normalized to (min, max), sorted and deduplicated.
  static Term graph(LabelSet vertices, std::vector<LabelPair> edges);
  // `relation` lists pairs x < y; the transitive closure is stored.
  // Throws DomainError if the closure is not antisymmetric.
  static Term poset(LabelSet elements, std::vector<LabelPair> relation);
  static Term tagged(int side, Term inner);
  static Term pair(Term left, Term right);
  static Term cauchy(Term left, Term right);
  // The partition is read off the inner grounds; the outer term must live on
  // exactly its block labels. Inner terms may be given in any order.
  static Term composite(Term outer, std::vector<Term> inners);

  Kind kind() const noexcept;
  const LabelSet& ground() const noexcept;

  const std::vector<Label>& sequence() const;    // Order, Cycle
  const std::vector<LabelPair>& relation() const;  // Graph edges, Poset pairs
  int side() const;                              // Tagged
  const Term& inner() const;                     // Tagged
  const Term& left() const;                      // Pair, Cauchy
  const Term& right() const;                     // Pair, Cauchy
  const Term& outer() const;                     // Composite
  std::span<const Term> inners() const;          // Composite, sorted by block
  const SetPartition& partition() const;         // Composite

  Term relabel(const Bijection& sigma) const;

  std::string to_string() const;

  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Tensor = std::vector<Term>;
using Vec = LinComb<Term>;
using Vec2 = LinComb<Tensor>;

std::string to_string(const Tensor& t);
std::string to_string(const Vec& v);
std::string to_string(const Vec2& v);

// Linear extension of relabeling.
Vec relabel(const Vec& v, const Bijection& sigma);

}  // namespace species
