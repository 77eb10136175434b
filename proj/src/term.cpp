#include "species/term.hpp"

#include <algorithm>
#include <set>

#include "species/errors.hpp"

namespace species {

struct Term::Node {
  Kind kind = Kind::Star;
  LabelSet ground;
  std::vector<Label> seq;
  std::vector<LabelPair> rel;
  int side = 0;
  std::vector<Term> kids;  // Composite: outer then inners
  SetPartition partition;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Star: return "star";
    case Kind::Order: return "order";
    case Kind::Cycle: return "cycle";
    case Kind::Graph: return "graph";
    case Kind::Poset: return "poset";
    case Kind::Tagged: return "sum";
    case Kind::Pair: return "hadamard";
    case Kind::Cauchy: return "cauchy";
    case Kind::Composite: return "composite";
  }
  return "?";
}

namespace {

const Term& empty_star() {
  static const Term t = Term::star({});
  return t;
}

std::vector<LabelPair> normalize_edges(const LabelSet& v, std::vector<LabelPair> edges) {
  for (auto& [a, b] : edges) {
    if (a == b) throw DomainError("graph loop at '" + a.str() + "'");
    if (!v.contains(a) || !v.contains(b))
      throw DomainError("edge " + a.str() + "-" + b.str() + " leaves the vertex set");
    if (b < a) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<LabelPair> transitive_closure(const LabelSet& v, const std::vector<LabelPair>& rel) {
  const std::size_t n = v.size();
  auto index = [&](const Label& l) {
    auto it = std::lower_bound(v.begin(), v.end(), l);
    if (it == v.end() || *it != l)
      throw DomainError("relation mentions '" + l.str() + "' outside the poset");
    return static_cast<std::size_t>(it - v.begin());
  };
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : rel) m[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i]) throw DomainError("relation is not antisymmetric");
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j]) out.emplace_back(v[i], v[j]);
  }
  return out;
}

}  // namespace

Term::Term() : Term(empty_star()) {}

Term Term::star(LabelSet ground) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Star;
  n->ground = std::move(ground);
  return Term(std::move(n));
}

Term Term::order(std::vector<Label> sequence) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Order;
  n->ground = LabelSet(sequence);
  n->seq = std::move(sequence);
  return Term(std::move(n));
}

Term Term::cycle(std::vector<Label> sequence) {
  if (sequence.empty()) throw DomainError("a cycle needs at least one label");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cycle;
  n->ground = LabelSet(sequence);
  std::rotate(sequence.begin(), std::min_element(sequence.begin(), sequence.end()),
              sequence.end());
  n->seq = std::move(sequence);
  return Term(std::move(n));
}

Term Term::graph(LabelSet vertices, std::vector<LabelPair> edges) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Graph;
  n->rel = normalize_edges(vertices, std::move(edges));
  n->ground = std::move(vertices);
  return Term(std::move(n));
}

Term Term::poset(LabelSet elements, std::vector<LabelPair> relation) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Poset;
  n->rel = transitive_closure(elements, relation);
  n->ground = std::move(elements);
  return Term(std::move(n));
}

Term Term::tagged(int side, Term inner) {
  if (side != 0 && side != 1) throw DomainError("sum side must be 0 or 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tagged;
  n->ground = inner.ground();
  n->side = side;
  n->kids.push_back(std::move(inner));
  return Term(std::move(n));
}

Term Term::pair(Term left, Term right) {
  if (left.ground() != right.ground())
    throw DomainError("Hadamard components live on different sets");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->ground = left.ground();
  n->kids = {std::move(left), std::move(right)};
  return Term(std::move(n));
}

Term Term::cauchy(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cauchy;
  n->ground = left.ground().unite(right.ground());  // throws on overlap
  n->kids = {std::move(left), std::move(right)};
  return Term(std::move(n));
}

Term Term::composite(Term outer, std::vector<Term> inners) {
  std::vector<LabelSet> blocks;
  blocks.reserve(inners.size());
  for (const auto& t : inners) {
    if (t.ground().empty()) throw DomainError("composite with an empty block");
    blocks.push_back(t.ground());
  }
  SetPartition x(std::move(blocks));
  if (outer.ground() != x.block_labels())
    throw DomainError("outer term lives on " + outer.ground().to_string() + ", expected " +
                      x.block_labels().to_string());
  std::sort(inners.begin(), inners.end(), [](const Term& a, const Term& b) {
    return a.ground()[0] < b.ground()[0];
  });
  auto n = std::make_shared<Node>();
  n->kind = Kind::Composite;
  n->ground = x.ground();
  n->partition = std::move(x);
  n->kids.reserve(inners.size() + 1);
  n->kids.push_back(std::move(outer));
  for (auto& t : inners) n->kids.push_back(std::move(t));
  return Term(std::move(n));
}

Kind Term::kind() const noexcept { return node_->kind; }
const LabelSet& Term::ground() const noexcept { return node_->ground; }

namespace {
void expect(const Term& t, std::initializer_list<Kind> kinds, const char* what) {
  for (Kind k : kinds)
    if (t.kind() == k) return;
  throw DomainError(std::string(what) + " is not defined for " + kind_name(t.kind()) + " terms");
}
}  // namespace

const std::vector<Label>& Term::sequence() const {
  expect(*this, {Kind::Order, Kind::Cycle}, "sequence()");
  return node_->seq;
}
const std::vector<LabelPair>& Term::relation() const {
  expect(*this, {Kind::Graph, Kind::Poset}, "relation()");
  return node_->rel;
}
int Term::side() const {
  expect(*this, {Kind::Tagged}, "side()");
  return node_->side;
}
const Term& Term::inner() const {
  expect(*this, {Kind::Tagged}, "inner()");
  return node_->kids[0];
}
const Term& Term::left() const {
  expect(*this, {Kind::Pair, Kind::Cauchy}, "left()");
  return node_->kids[0];
}
const Term& Term::right() const {
  expect(*this, {Kind::Pair, Kind::Cauchy}, "right()");
  return node_->kids[1];
}
const Term& Term::outer() const {
  expect(*this, {Kind::Composite}, "outer()");
  return node_->kids[0];
}
std::span<const Term> Term::inners() const {
  expect(*this, {Kind::Composite}, "inners()");
  return std::span<const Term>(node_->kids).subspan(1);
}
const SetPartition& Term::partition() const {
  expect(*this, {Kind::Composite}, "partition()");
  return node_->partition;
}

Term Term::relabel(const Bijection& sigma) const {
  const Node& n = *node_;
  auto map_seq = [&](const std::vector<Label>& s) {
    std::vector<Label> out;
    out.reserve(s.size());
    for (const auto& l : s) out.push_back(sigma(l));
    return out;
  };
  auto map_pairs = [&](const std::vector<LabelPair>& s) {
    std::vector<LabelPair> out;
    out.reserve(s.size());
    for (const auto& [a, b] : s) out.emplace_back(sigma(a), sigma(b));
    return out;
  };
  switch (n.kind) {
    case Kind::Star: return star(sigma(n.ground));
    case Kind::Order: return order(map_seq(n.seq));
    case Kind::Cycle: return cycle(map_seq(n.seq));
    case Kind::Graph: return graph(sigma(n.ground), map_pairs(n.rel));
    case Kind::Poset: return poset(sigma(n.ground), map_pairs(n.rel));
    case Kind::Tagged: return tagged(n.side, n.kids[0].relabel(sigma));
    case Kind::Pair: return pair(n.kids[0].relabel(sigma), n.kids[1].relabel(sigma));
    case Kind::Cauchy: return cauchy(n.kids[0].relabel(sigma), n.kids[1].relabel(sigma));
    case Kind::Composite: {
      std::vector<Term> inners;
      std::map<Label, Label> blocks;
      for (std::size_t i = 1; i < n.kids.size(); ++i) {
        const auto& t = n.kids[i];
        inners.push_back(t.relabel(sigma));
        blocks.emplace(t.ground().as_block_label(), inners.back().ground().as_block_label());
      }
      return composite(n.kids[0].relabel(Bijection(std::move(blocks))), std::move(inners));
    }
  }
  return *this;
}

std::string Term::to_string() const {
  const Node& n = *node_;
  auto join = [](const std::vector<Label>& s, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += sep;
      out += s[i].str();
    }
    return out;
  };
  auto pairs = [](const std::vector<LabelPair>& s, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += s[i].first.str() + sep + s[i].second.str();
    }
    return out;
  };
  switch (n.kind) {
    case Kind::Star: return "*" + n.ground.to_string();
    case Kind::Order: return "(" + join(n.seq, "|") + ")";
    case Kind::Cycle: return "<" + join(n.seq, " ") + ">";
    case Kind::Graph:
      return "G{" + join(n.ground.labels(), ",") + ";" + pairs(n.rel, "-") + "}";
    case Kind::Poset:
      return "P{" + join(n.ground.labels(), ",") + ";" + pairs(n.rel, "<") + "}";
    case Kind::Tagged:
      return std::string(n.side == 0 ? "inl" : "inr") + "(" + n.kids[0].to_string() + ")";
    case Kind::Pair: return "pair(" + n.kids[0].to_string() + ", " + n.kids[1].to_string() + ")";
    case Kind::Cauchy: return "[" + n.kids[0].to_string() + " . " + n.kids[1].to_string() + "]";
    case Kind::Composite: {
      std::string out = n.kids[0].to_string() + "[";
      for (std::size_t i = 1; i < n.kids.size(); ++i) {
        if (i > 1) out += ", ";
        out += n.kids[i].ground().to_string() + ":" + n.kids[i].to_string();
      }
      return out + "]";
    }
  }
  return "?";
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.ground <=> b.ground; c != 0) return c;
  if (auto c = a.seq <=> b.seq; c != 0) return c;
  if (auto c = a.rel <=> b.rel; c != 0) return c;
  if (auto c = a.side <=> b.side; c != 0) return c;
  return a.kids <=> b.kids;
}

bool Term::operator==(const Term& other) const { return (*this <=> other) == 0; }

std::string to_string(const Tensor& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " (x) ";
    out += t[i].to_string();
  }
  return out;
}

namespace {
std::string key_text(const Term& t) { return t.to_string(); }
std::string key_text(const Tensor& t) { return to_string(t); }

template <class K>
std::string lincomb_text(const LinComb<K>& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    Rational a = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (a != 1) out += a.get_str() + " ";
    out += key_text(k);
    first = false;
  }
  return out;
}
}  // namespace

std::string to_string(const Vec& v) { return lincomb_text(v); }
std::string to_string(const Vec2& v) { return lincomb_text(v); }

Vec relabel(const Vec& v, const Bijection& sigma) {
  Vec out;
  for (const auto& [t, c] : v) out.add(t.relabel(sigma), c);
  return out;
}

}  // namespace species
