#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "species/term.hpp"

namespace species {

using Json = nlohmann::json;

/// Describes which term kinds a species produces, so JSON (which cannot tell
/// a set from an order) can be decoded.
struct Shape {
  Kind kind = Kind::Star;
  std::vector<Shape> kids;  // Tagged: {left, right}; Pair/Cauchy: {l, r}; Composite: {outer, inner}

  bool operator==(const Shape&) const = default;
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json encode_label(const Label& l);
Label decode_label(const Json& j);

Json encode(const Term& t);
Json encode(const Vec& v);
Json encode(const Vec2& v);

Term decode_term(const Json& j, const Shape& shape);
Vec decode_vec(const Json& j, const Shape& shape);
Vec2 decode_vec2(const Json& j, const Shape& left, const Shape& right);

}  // namespace species
