#include <doctest.h>

#include <set>

#include "species/errors.hpp"
#include "species/labels.hpp"
#include "species/linalg.hpp"
#include "species/lincomb.hpp"
#include "species/rational.hpp"

using namespace species;

namespace {

// Bell numbers from the Bell triangle, independent of the partition code.
std::vector<std::size_t> bell_triangle(std::size_t n) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

LabelSet ls(const std::string& s) { return LabelSet::parse(s); }

}  // namespace

TEST_CASE("rationals print with an explicit denominator and parse back") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-2) / 4) == "-1/2");
  CHECK(parse_rational("-6/8") == Rational(-3) / 4);
  CHECK(parse_rational("5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("labels and label sets") {
  CHECK_THROWS_AS(Label("a,b"), DomainError);
  CHECK_THROWS_AS(Label(""), DomainError);
  CHECK_THROWS_AS(LabelSet({"a", "a"}), DomainError);

  LabelSet s = ls("c,a,b");
  CHECK(s.to_string() == "{a,b,c}");
  CHECK(s.contains(Label("b")));
  CHECK(ls("a,c").subset_of(s));
  CHECK(s.intersect(ls("b,d")) == ls("b"));
  CHECK(s.minus(ls("a")) == ls("b,c"));
  CHECK(ls("a").disjoint_from(ls("b")));
  CHECK_THROWS_AS(s.unite(ls("c,d")), DomainError);
  CHECK(LabelSet::parse("").empty());
}

TEST_CASE("block labels nest and invert") {
  Label b = ls("b,a").as_block_label();
  CHECK(b.str() == "{a,b}");
  CHECK(b.is_block());
  CHECK(block_members(b) == ls("a,b"));

  LabelSet outer(std::vector<Label>{b, ls("c").as_block_label()});
  Label nested = outer.as_block_label();
  CHECK(nested.str() == "{{a,b},{c}}");
  LabelSet members = block_members(nested);
  CHECK(members.size() == 2);
  CHECK(members.contains(b));
  CHECK_THROWS_AS(block_members(Label("a")), DomainError);
}

TEST_CASE("bijections compose and invert") {
  Bijection s(std::map<Label, Label>{{Label("a"), Label("x")}, {Label("b"), Label("y")}});
  CHECK(s(Label("a")) == Label("x"));
  CHECK(s.inverse()(Label("y")) == Label("b"));
  CHECK(s.inverse().after(s) == Bijection::identity(ls("a,b")));
  CHECK(s(ls("a,b")) == ls("x,y"));
  CHECK_THROWS_AS(s(Label("z")), DomainError);
  CHECK_THROWS_AS(Bijection(std::map<Label, Label>{{Label("a"), Label("x")},
                                                   {Label("b"), Label("x")}}),
                  DomainError);
  Bijection t = Bijection::adjacent_transposition(ls("a,b,c"), 1);
  CHECK(t(Label("b")) == Label("c"));
  CHECK(t(Label("a")) == Label("a"));
  CHECK(s.restricted_to(ls("a")).domain() == ls("a"));
}

TEST_CASE("decompositions: k^n ordered, pairwise disjoint, covering") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      auto all = enumerate_decompositions(canonical_labels(n), k);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= k;
      CHECK(all.size() == expected);
      std::set<Decomposition> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      for (const auto& d : all) CHECK(d.ground() == canonical_labels(n));
    }
  auto first = enumerate_decompositions(ls("a,b"), 2);
  CHECK(first.front()[0] == ls("a,b"));
}

TEST_CASE("set partitions are counted by the Bell numbers") {
  auto bell = bell_triangle(7);
  for (std::size_t n = 0; n <= 7; ++n) {
    auto parts = enumerate_partitions(canonical_labels(n));
    CHECK(parts.size() == bell[n]);
    std::set<SetPartition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
  }
  CHECK_THROWS_AS(SetPartition({ls("a,b"), ls("b")}), DomainError);
  CHECK_THROWS_AS(SetPartition({ls("")}), DomainError);
}

TEST_CASE("restricting partitions") {
  SetPartition x({ls("a,b"), ls("c"), ls("d,e")});
  LabelSet t = ls("b,c");
  SetPartition support = partition_support_restrict(x, t);
  SetPartition cut = partition_restrict(x, t);
  CHECK(support.blocks() == std::vector<LabelSet>{ls("a,b"), ls("c")});
  CHECK(cut.blocks() == std::vector<LabelSet>{ls("b"), ls("c")});
  Bijection f = support_to_restriction(x, t);
  CHECK(f(ls("a,b").as_block_label()) == ls("b").as_block_label());
  CHECK(f.domain() == support.block_labels());
  CHECK(f.codomain() == cut.block_labels());
  CHECK(x.block_index_of(Label("e")) == 2);

  // X_T ⊢ T and (X_T)_U = X_U for U ⊆ T, over every partition of a 4-set.
  for (const auto& y : enumerate_partitions(canonical_labels(4)))
    for (const auto& d : enumerate_decompositions(canonical_labels(4), 2)) {
      SetPartition yt = partition_restrict(y, d[0]);
      CHECK(yt.ground() == d[0]);
      LabelSet u = d[0].empty() ? d[0] : LabelSet(std::vector<Label>{d[0][0]});
      CHECK(partition_restrict(yt, u) == partition_restrict(y, u));
      CHECK(partition_support_restrict(y, d[0]).size() == yt.size());
    }
}

TEST_CASE("size classes and the large/small split") {
  SetPartition x({ls("a"), ls("b,c"), ls("d,e,f"), ls("g")});
  auto classes = group_blocks_by_size(x);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size() == 2);
  CHECK(classes[1] == std::vector<LabelSet>{ls("b,c")});
  auto [large, small] = large_small_split(x, 2);
  CHECK(large.size() == 2);
  CHECK(small.ground() == ls("a,g"));
  auto [all, none] = large_small_split(x, 1);
  CHECK(none.empty());
  CHECK(all == x);
}

TEST_CASE("linear combinations drop zeros and compare exactly") {
  using V = LinComb<std::string>;
  V a("x", 2);
  a.add("y", Rational(1) / 3);
  V b("x", -2);
  V c = a + b;
  CHECK(c.size() == 1);
  CHECK(c.coefficient("y") == Rational(1) / 3);
  CHECK(c.coefficient("x") == 0);
  CHECK((a - a).empty());
  CHECK(Rational(3) * V("z") == V("z", 3));
  CHECK(V("z").is_basis_element());
  CHECK_FALSE(V("z", 2).is_basis_element());
  auto doubled = apply_linear<std::string>(a, [](const std::string& k) { return V(k + k); });
  CHECK(doubled.coefficient("xx") == 2);

  auto t = tensor_expand<std::string>({V("a") + V("b"), V("c", 3)});
  CHECK(t.size() == 2);
  CHECK(t.coefficient({"b", "c"}) == 3);
}

TEST_CASE("echelon form: rank, membership and explicit coefficients") {
  using V = LinComb<int>;
  V v1(1);
  v1.add(2, 1);
  V v2(2);
  v2.add(3, 1);
  V v3 = v1 + v2;
  Echelon<int> e;
  CHECK(e.insert(v1));
  CHECK(e.insert(v2));
  CHECK_FALSE(e.insert(v3));
  CHECK(e.rank() == 2);
  V target = Rational(2) * v1 - v2;
  auto coeffs = e.coefficients(target);
  REQUIRE(coeffs);
  V rebuilt;
  std::vector<V> inserted{v1, v2, v3};
  for (std::size_t i = 0; i < inserted.size(); ++i) rebuilt.add_scaled(inserted[i], (*coeffs)[i]);
  CHECK(rebuilt == target);
  CHECK_FALSE(e.contains(V(4)));
  CHECK(rank(std::vector<V>{v1, v2, v3}) == 2);
  CHECK_FALSE(span_membership(std::vector<V>{v1}, v2));
}
