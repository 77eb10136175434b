#pragma once

#include <map>
#include <optional>
#include <vector>

#include "species/lincomb.hpp"

namespace species {

/// Incremental row echelon form over Q. Rows are keyed by their pivot, the
/// least key present; each stored row is normalized to pivot coefficient 1.
/// Alongside every row we keep its expression in the inserted vectors, so
/// membership queries can return explicit coefficients.
template <class K>
class Echelon {
 public:
  // Inserts v; returns true iff it increased the rank.
  bool insert(const LinComb<K>& v) {
    LinComb<std::size_t> combo{inserted_++};
    auto [rest, track] = reduce(v, combo);
    if (rest.empty()) return false;
    const auto& [pivot, c] = *rest.begin();
    Rational inv = 1 / c;
    rows_.emplace(pivot, Row{scale(inv, rest), scale(inv, track)});
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  bool contains(const LinComb<K>& v) const { return reduce(v, {}).first.empty(); }

  // Coefficients a_i (one per inserted vector, in insertion order) with
  // v = Σ a_i v_i, or nullopt when v is outside the span.
  std::optional<std::vector<Rational>> coefficients(const LinComb<K>& v) const {
    auto [rest, track] = reduce(v, {});
    if (!rest.empty()) return std::nullopt;
    std::vector<Rational> out(inserted_);
    for (const auto& [i, c] : track) out[i] = -c;
    return out;
  }

 private:
  struct Row {
    LinComb<K> vec;
    LinComb<std::size_t> track;
  };

  // Eliminates pivots in ascending order. Returns the residue of v and the
  // tracked combination (residue = v + Σ track_i v_i, starting from `track`).
  std::pair<LinComb<K>, LinComb<std::size_t>> reduce(LinComb<K> v,
                                                     LinComb<std::size_t> track) const {
    LinComb<K> done;
    while (!v.empty()) {
      auto [key, c] = *v.begin();
      auto it = rows_.find(key);
      if (it == rows_.end()) {
        done.add(key, c);
        v.add(key, -c);
        continue;
      }
      Rational f = -c;
      v.add_scaled(it->second.vec, f);
      track.add_scaled(it->second.track, f);
    }
    return {std::move(done), std::move(track)};
  }

  std::map<K, Row> rows_;
  std::size_t inserted_ = 0;
};

// Span membership with explicit coefficients when the candidate lies in the span.
template <class K>
std::optional<std::vector<Rational>> span_membership(const std::vector<LinComb<K>>& vectors,
                                                     const LinComb<K>& candidate) {
  Echelon<K> e;
  for (const auto& v : vectors) e.insert(v);
  return e.coefficients(candidate);
}

template <class K>
std::size_t rank(const std::vector<LinComb<K>>& vectors) {
  Echelon<K> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace species
