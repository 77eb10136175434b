#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace species {

class Label;
class LabelSet;
LabelSet block_members(const Label& block_label);

/// An element of a finite ground set.
///
/// Atomic labels are short tokens without commas, pipes, braces or
/// whitespace. Block labels are derived: the label of a block B is
/// "{x,y,...}" over the sorted labels of B, so that a structure placed on the
/// blocks of a partition is an ordinary structure on a label set.
class Label {
 public:
  Label() = default;
  // Throws DomainError if `text` is not a valid atomic label.
  explicit Label(std::string text);

  const std::string& str() const noexcept { return text_; }
  bool is_block() const noexcept { return !text_.empty() && text_.front() == '{'; }

  auto operator<=>(const Label&) const = default;

 private:
  struct Unchecked {};
  Label(Unchecked, std::string text) : text_(std::move(text)) {}
  friend class LabelSet;
  friend LabelSet block_members(const Label& block_label);

  std::string text_;
};

/// A finite set of labels kept as a strictly increasing sequence.
class LabelSet {
 public:
  LabelSet() = default;
  // Sorts; throws DomainError on duplicates.
  explicit LabelSet(std::vector<Label> labels);
  LabelSet(std::initializer_list<const char*> labels);

  // Convenience: "a,b,c" (empty string gives the empty set).
  static LabelSet parse(const std::string& comma_separated);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }
  const Label& operator[](std::size_t i) const { return labels_[i]; }

  bool contains(const Label& l) const;
  bool subset_of(const LabelSet& other) const;
  bool disjoint_from(const LabelSet& other) const;

  LabelSet unite(const LabelSet& other) const;
  LabelSet intersect(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  // The derived label naming this set as a block.
  Label as_block_label() const;

  std::string to_string() const;  // "{a,b}"

  auto operator<=>(const LabelSet&) const = default;

 private:
  struct Sorted {};
  LabelSet(Sorted, std::vector<Label> labels) : labels_(std::move(labels)) {}

  std::vector<Label> labels_;
};

// Inverse of LabelSet::as_block_label. Throws DomainError for atomic labels.
LabelSet block_members(const Label& block_label);

// Canonical ground sets "1".."n" used by the exhaustive checkers.
LabelSet canonical_labels(std::size_t n);

/// A bijection between two label sets.
class Bijection {
 public:
  Bijection() = default;
  // Throws DomainError unless the mapping is injective.
  explicit Bijection(std::map<Label, Label> pairs);

  static Bijection identity(const LabelSet& on);
  // Adjacent transposition of the i-th and (i+1)-th labels of `on`.
  static Bijection adjacent_transposition(const LabelSet& on, std::size_t i);

  // Throws DomainError for labels outside the domain.
  const Label& operator()(const Label& l) const;
  LabelSet operator()(const LabelSet& s) const;

  bool defined_on(const Label& l) const { return pairs_.count(l) != 0; }
  LabelSet domain() const;
  LabelSet codomain() const;
  Bijection inverse() const;
  // (this ∘ inner)(x) = this(inner(x)).
  Bijection after(const Bijection& inner) const;
  Bijection restricted_to(const LabelSet& subset) const;

  const std::map<Label, Label>& pairs() const noexcept { return pairs_; }
  bool operator==(const Bijection&) const = default;

 private:
  std::map<Label, Label> pairs_;
};

/// Ordered tuple of pairwise-disjoint (possibly empty) parts.
struct Decomposition {
  std::vector<LabelSet> parts;

  LabelSet ground() const;
  const LabelSet& operator[](std::size_t i) const { return parts[i]; }
  std::size_t size() const { return parts.size(); }
  auto operator<=>(const Decomposition&) const = default;
};

// All k^|I| decompositions of I into k ordered parts, in base-k counting
// order with the first label as the most significant digit.
std::vector<Decomposition> enumerate_decompositions(const LabelSet& ground, std::size_t k);

/// Unordered partition into nonempty blocks, stored sorted by minimum label.
class SetPartition {
 public:
  SetPartition() = default;
  // Validates disjointness and nonemptiness; sorts blocks.
  explicit SetPartition(std::vector<LabelSet> blocks);

  const std::vector<LabelSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const LabelSet& ground() const noexcept { return ground_; }

  // The label set {label(B) : B in X}.
  LabelSet block_labels() const;
  // Index of the block containing l (DomainError if none).
  std::size_t block_index_of(const Label& l) const;
  // Index of the block whose derived label is `block_label` (DomainError if none).
  std::size_t block_index_by_label(const Label& block_label) const;

  std::string to_string() const;

  auto operator<=>(const SetPartition& other) const { return blocks_ <=> other.blocks_; }
  bool operator==(const SetPartition& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<LabelSet> blocks_;
  LabelSet ground_;
};

// Every partition of I exactly once (restricted-growth-string order).
std::vector<SetPartition> enumerate_partitions(const LabelSet& ground);

// X^T: the blocks of X meeting T, as a partition of their union.
SetPartition partition_support_restrict(const SetPartition& x, const LabelSet& t);
// X_T: the nonempty intersections B ∩ T, a partition of T.
SetPartition partition_restrict(const SetPartition& x, const LabelSet& t);
// The block bijection X^T -> X_T on derived block labels.
Bijection support_to_restriction(const SetPartition& x, const LabelSet& t);

// (X^1, ..., X^k): X^i holds the blocks of size i, k the largest block size.
std::vector<std::vector<LabelSet>> group_blocks_by_size(const SetPartition& x);

struct LargeSmall {
  SetPartition large;  // |B| >= r
  SetPartition small;  // |B| <  r
};
LargeSmall large_small_split(const SetPartition& x, std::size_t r);

}  // namespace species
