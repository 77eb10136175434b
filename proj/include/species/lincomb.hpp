#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "species/rational.hpp"

namespace species {

/// Finite formal linear combination over keys K with exact coefficients.
/// Zero coefficients are never stored.
template <class K>
class LinComb {
 public:
  using Map = std::map<K, Rational>;

  LinComb() = default;
  explicit LinComb(K key, Rational c = 1) { add(std::move(key), c); }

  void add(const K& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  // this += c * other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, c * v);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, const LinComb& v) {
    LinComb out;
    out.add_scaled(v, c);
    return out;
  }
  LinComb operator-() const { return Rational(-1) * *this; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

  Rational coefficient(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // True iff the value is exactly one key with coefficient 1.
  bool is_basis_element() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
  }

  bool operator==(const LinComb& other) const { return terms_ == other.terms_; }

 private:
  Map terms_;
};

template <class K>
LinComb<K> scale(const Rational& c, const LinComb<K>& v) {
  return c * v;
}

// Linear extension of f: K -> LinComb<K2>.
template <class K2, class K, class F>
LinComb<K2> apply_linear(const LinComb<K>& v, F&& f) {
  LinComb<K2> out;
  for (const auto& [k, c] : v) out.add_scaled(f(k), c);
  return out;
}

// Distributes a tuple of linear combinations into a combination of tuples.
template <class K>
LinComb<std::vector<K>> tensor_expand(const std::vector<LinComb<K>>& factors) {
  LinComb<std::vector<K>> acc{std::vector<K>{}};
  for (const auto& f : factors) {
    LinComb<std::vector<K>> next;
    for (const auto& [tuple, c] : acc) {
      for (const auto& [k, d] : f) {
        auto t = tuple;
        t.push_back(k);
        next.add(t, c * d);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace species
