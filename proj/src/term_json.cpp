#include "species/term_json.hpp"

#include "species/errors.hpp"

namespace species {

Json encode_label(const Label& l) {
  if (!l.is_block()) return l.str();
  Json arr = Json::array();
  for (const auto& m : block_members(l)) arr.push_back(encode_label(m));
  return arr;
}

Label decode_label(const Json& j) {
  if (j.is_string()) return Label(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Label> members;
    for (const auto& m : j) members.push_back(decode_label(m));
    return LabelSet(std::move(members)).as_block_label();
  }
  throw DecodeError("label must be a string or an array, got " + j.dump());
}

namespace {

Json encode_labels(const std::vector<Label>& ls) {
  Json arr = Json::array();
  for (const auto& l : ls) arr.push_back(encode_label(l));
  return arr;
}

Json encode_pairs(const std::vector<LabelPair>& ps) {
  Json arr = Json::array();
  for (const auto& [a, b] : ps) arr.push_back(Json::array({encode_label(a), encode_label(b)}));
  return arr;
}

std::vector<Label> decode_labels(const Json& j) {
  if (!j.is_array()) throw DecodeError("expected an array of labels, got " + j.dump());
  std::vector<Label> out;
  for (const auto& l : j) out.push_back(decode_label(l));
  return out;
}

std::vector<LabelPair> decode_pairs(const Json& j) {
  if (!j.is_array()) throw DecodeError("expected an array of pairs, got " + j.dump());
  std::vector<LabelPair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw DecodeError("malformed pair " + p.dump());
    out.emplace_back(decode_label(p[0]), decode_label(p[1]));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DecodeError(std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

}  // namespace

Json encode(const Term& t) {
  switch (t.kind()) {
    case Kind::Star: return encode_labels(t.ground().labels());
    case Kind::Order:
    case Kind::Cycle: return encode_labels(t.sequence());
    case Kind::Graph:
      return Json{{"v", encode_labels(t.ground().labels())}, {"e", encode_pairs(t.relation())}};
    case Kind::Poset:
      return Json{{"v", encode_labels(t.ground().labels())}, {"rel", encode_pairs(t.relation())}};
    case Kind::Tagged:
      return Json{{"sum", t.side() == 0 ? "left" : "right"}, {"t", encode(t.inner())}};
    case Kind::Pair: return Json{{"pair", Json::array({encode(t.left()), encode(t.right())})}};
    case Kind::Cauchy: return Json{{"left", encode(t.left())}, {"right", encode(t.right())}};
    case Kind::Composite: {
      Json partition = Json::array();
      Json inner = Json::array();
      for (const auto& b : t.inners()) {
        partition.push_back(encode_labels(b.ground().labels()));
        inner.push_back(Json{{"block", encode_labels(b.ground().labels())}, {"term", encode(b)}});
      }
      return Json{{"partition", partition}, {"outer", encode(t.outer())}, {"inner", inner}};
    }
  }
  return nullptr;
}

Term decode_term(const Json& j, const Shape& shape) {
  try {
    switch (shape.kind) {
      case Kind::Star: {
        auto ls = decode_labels(j);
        LabelSet s(ls);
        if (s.labels() != ls) throw DecodeError("set must be sorted: " + j.dump());
        return Term::star(std::move(s));
      }
      case Kind::Order: return Term::order(decode_labels(j));
      case Kind::Cycle: return Term::cycle(decode_labels(j));
      case Kind::Graph:
        return Term::graph(LabelSet(decode_labels(field(j, "v"))), decode_pairs(field(j, "e")));
      case Kind::Poset:
        return Term::poset(LabelSet(decode_labels(field(j, "v"))), decode_pairs(field(j, "rel")));
      case Kind::Tagged: {
        const auto& side = field(j, "sum");
        if (side != "left" && side != "right")
          throw DecodeError("sum side must be \"left\" or \"right\"");
        int s = side == "left" ? 0 : 1;
        return Term::tagged(s, decode_term(field(j, "t"), shape.kids.at(s)));
      }
      case Kind::Pair: {
        const auto& p = field(j, "pair");
        if (!p.is_array() || p.size() != 2) throw DecodeError("\"pair\" needs two entries");
        return Term::pair(decode_term(p[0], shape.kids.at(0)), decode_term(p[1], shape.kids.at(1)));
      }
      case Kind::Cauchy:
        return Term::cauchy(decode_term(field(j, "left"), shape.kids.at(0)),
                            decode_term(field(j, "right"), shape.kids.at(1)));
      case Kind::Composite: {
        std::vector<Term> inners;
        for (const auto& e : field(j, "inner")) {
          Term t = decode_term(field(e, "term"), shape.kids.at(1));
          if (LabelSet(decode_labels(field(e, "block"))) != t.ground())
            throw DecodeError("block does not match its term: " + e.dump());
          inners.push_back(std::move(t));
        }
        Term out = Term::composite(decode_term(field(j, "outer"), shape.kids.at(0)),
                                   std::move(inners));
        if (j.contains("partition")) {
          std::vector<LabelSet> blocks;
          for (const auto& b : j.at("partition")) blocks.emplace_back(decode_labels(b));
          if (SetPartition(std::move(blocks)) != out.partition())
            throw DecodeError("partition does not match the inner blocks");
        }
        return out;
      }
    }
  } catch (const DomainError& e) {
    throw DecodeError(std::string("invalid ") + kind_name(shape.kind) + " term: " + e.what());
  } catch (const Json::exception& e) {
    throw DecodeError(e.what());
  }
  throw DecodeError("unknown shape");
}

Json encode(const Vec& v) {
  Json arr = Json::array();
  for (const auto& [t, c] : v) arr.push_back(Json{{"c", to_string(c)}, {"t", encode(t)}});
  return arr;
}

Json encode(const Vec2& v) {
  Json arr = Json::array();
  for (const auto& [t, c] : v) {
    Json ts = Json::array();
    for (const auto& f : t) ts.push_back(encode(f));
    arr.push_back(Json{{"c", to_string(c)}, {"t", ts}});
  }
  return arr;
}

namespace {
Rational decode_coefficient(const Json& j) {
  const auto& c = field(j, "c");
  if (!c.is_string()) throw DecodeError("coefficient must be a string \"num/den\"");
  try {
    return parse_rational(c.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
}
}  // namespace

Vec decode_vec(const Json& j, const Shape& shape) {
  if (!j.is_array()) throw DecodeError("linear combination must be an array");
  Vec out;
  for (const auto& e : j) out.add(decode_term(field(e, "t"), shape), decode_coefficient(e));
  return out;
}

Vec2 decode_vec2(const Json& j, const Shape& left, const Shape& right) {
  if (!j.is_array()) throw DecodeError("linear combination must be an array");
  Vec2 out;
  for (const auto& e : j) {
    const auto& t = field(e, "t");
    if (!t.is_array() || t.size() != 2) throw DecodeError("tensor must have two factors");
    out.add(Tensor{decode_term(t[0], left), decode_term(t[1], right)}, decode_coefficient(e));
  }
  return out;
}

}  // namespace species
