#include <doctest.h>

#include "species/errors.hpp"
#include "species/term.hpp"
#include "species/term_json.hpp"

using namespace species;

namespace {

LabelSet ls(const std::string& s) { return LabelSet::parse(s); }
std::vector<Label> seq(std::initializer_list<const char*> xs) {
  std::vector<Label> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
LabelPair edge(const char* a, const char* b) { return {Label(a), Label(b)}; }
Label blk(const std::string& s) { return ls(s).as_block_label(); }

void round_trip(const Term& t, const Shape& shape) {
  Json j = encode(t);
  Term back = decode_term(j, shape);
  CHECK(back == t);
  CHECK(encode(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("canonical forms") {
  Term c1 = Term::cycle(seq({"c", "a", "b"}));
  Term c2 = Term::cycle(seq({"a", "b", "c"}));
  CHECK(c1 == c2);
  CHECK(c1.sequence().front() == Label("a"));
  CHECK(Term::cycle(seq({"a", "c", "b"})) != c2);  // directed: no reflections

  Term g1 = Term::graph(ls("a,b,c"), {edge("b", "a"), edge("c", "b"), edge("a", "b")});
  CHECK(g1.relation() == std::vector<LabelPair>{edge("a", "b"), edge("b", "c")});
  CHECK_THROWS_AS(Term::graph(ls("a,b"), {edge("a", "a")}), DomainError);
  CHECK_THROWS_AS(Term::graph(ls("a,b"), {edge("a", "z")}), DomainError);

  Term p = Term::poset(ls("a,b,c"), {edge("a", "b"), edge("b", "c")});
  CHECK(p.relation().size() == 3);  // closure adds a < c
  CHECK_THROWS_AS(Term::poset(ls("a,b"), {edge("a", "b"), edge("b", "a")}), DomainError);

  CHECK(Term().kind() == Kind::Star);
  CHECK(Term().ground().empty());
}

TEST_CASE("composites derive their partition and validate the outer term") {
  Term outer = Term::order({blk("c"), blk("a,b")});
  Term x = Term::composite(outer, {Term::order(seq({"c"})), Term::order(seq({"b", "a"}))});
  CHECK(x.ground() == ls("a,b,c"));
  CHECK(x.partition().blocks() == std::vector<LabelSet>{ls("a,b"), ls("c")});
  CHECK(x.inners()[0].ground() == ls("a,b"));
  CHECK(x.to_string() == "({c}|{a,b})[{a,b}:(b|a), {c}:(c)]");
  CHECK_THROWS_AS(Term::composite(Term::order({blk("a")}), {Term::order(seq({"b"}))}),
                  DomainError);
  CHECK_THROWS_AS(Term::cauchy(Term::star(ls("a")), Term::star(ls("a"))), DomainError);
  CHECK_THROWS_AS(Term::pair(Term::star(ls("a")), Term::star(ls("b"))), DomainError);
}

TEST_CASE("relabeling is structural") {
  Bijection s(std::map<Label, Label>{{Label("a"), Label("x")}, {Label("b"), Label("y")},
                                     {Label("c"), Label("z")}});
  Term g = Term::graph(ls("a,b,c"), {edge("a", "c")});
  CHECK(g.relabel(s) == Term::graph(ls("x,y,z"), {edge("x", "z")}));
  Term c = Term::cycle(seq({"b", "a", "c"}));
  CHECK(c.relabel(s).sequence() == seq({"x", "z", "y"}));

  Term comp = Term::composite(Term::star(ls("").unite(LabelSet({blk("a,b"), blk("c")}))),
                              {Term::star(ls("a,b")), Term::star(ls("c"))});
  Term moved = comp.relabel(s);
  CHECK(moved.partition().blocks() == std::vector<LabelSet>{ls("x,y"), ls("z")});
  CHECK(moved.outer().ground() == LabelSet({blk("x,y"), blk("z")}));
}

TEST_CASE("text forms") {
  CHECK(Term::star(ls("a,b")).to_string() == "*{a,b}");
  CHECK(Term::order(seq({"a", "b", "c"})).to_string() == "(a|b|c)");
  CHECK(Term::cycle(seq({"a", "b", "c"})).to_string() == "<a b c>");
  CHECK(Term::graph(ls("a,b"), {edge("a", "b")}).to_string() == "G{a,b;a-b}");
  CHECK(Term::poset(ls("a,b"), {edge("a", "b")}).to_string() == "P{a,b;a<b}");
  CHECK(Term::tagged(1, Term::star(ls("a"))).to_string() == "inr(*{a})");
  CHECK(Term::cauchy(Term::star(ls("a")), Term::star(ls("b"))).to_string() == "[*{a} . *{b}]");
}

TEST_CASE("terms are totally ordered and equality is structural") {
  Term a = Term::order(seq({"a", "b"}));
  Term b = Term::order(seq({"b", "a"}));
  CHECK(a != b);
  CHECK(((a < b) != (b < a)));
  CHECK(a == Term::order(seq({"a", "b"})));
}

TEST_CASE("JSON round trips for every kind") {
  Shape star{Kind::Star, {}}, order{Kind::Order, {}}, cycle{Kind::Cycle, {}},
      graph{Kind::Graph, {}}, poset{Kind::Poset, {}};
  round_trip(Term::star(ls("a,b")), star);
  round_trip(Term(), star);
  round_trip(Term::order(seq({"b", "a"})), order);
  round_trip(Term::cycle(seq({"b", "a", "c"})), cycle);
  round_trip(Term::graph(ls("a,b,c"), {edge("c", "a")}), graph);
  round_trip(Term::poset(ls("a,b,c"), {edge("a", "b"), edge("a", "c")}), poset);
  round_trip(Term::tagged(0, Term::order(seq({"a"}))), Shape{Kind::Tagged, {order, graph}});
  round_trip(Term::tagged(1, Term::graph(ls("a"), {})), Shape{Kind::Tagged, {order, graph}});
  round_trip(Term::pair(Term::star(ls("a,b")), Term::order(seq({"b", "a"}))),
             Shape{Kind::Pair, {star, order}});
  round_trip(Term::cauchy(Term::star(ls("a")), Term::cycle(seq({"b", "c"}))),
             Shape{Kind::Cauchy, {star, cycle}});
  Term comp = Term::composite(Term::order({blk("c"), blk("a,b")}),
                              {Term::graph(ls("a,b"), {edge("a", "b")}), Term::graph(ls("c"), {})});
  round_trip(comp, Shape{Kind::Composite, {order, graph}});

  Vec v(Term::order(seq({"a", "b"})), Rational(-3) / 2);
  v.add(Term::order(seq({"b", "a"})), 1);
  CHECK(decode_vec(encode(v), order) == v);
  Vec2 w(Tensor{Term::star(ls("a")), Term::order(seq({"b"}))}, 5);
  CHECK(decode_vec2(encode(w), star, order) == w);
  CHECK(encode(v).dump() == R"([{"c":"-3/2","t":["a","b"]},{"c":"1/1","t":["b","a"]}])");
}

TEST_CASE("JSON encodings follow the documented layout") {
  Term g = Term::graph(ls("b,a"), {edge("b", "a")});
  CHECK(encode(g).dump() == R"({"e":[["a","b"]],"v":["a","b"]})");
  Term comp = Term::composite(Term::star(LabelSet({blk("a,b")})), {Term::star(ls("a,b"))});
  CHECK(encode(comp).dump() ==
        R"({"inner":[{"block":["a","b"],"term":["a","b"]}],"outer":[["a","b"]],"partition":[["a","b"]]})");
}

TEST_CASE("malformed JSON is rejected with DecodeError") {
  Shape star{Kind::Star, {}}, order{Kind::Order, {}};
  CHECK_THROWS_AS(decode_term(Json::parse(R"(["b","a"])"), star), DecodeError);
  CHECK_THROWS_AS(decode_term(Json::parse(R"({"x":1})"), Shape{Kind::Graph, {}}), DecodeError);
  CHECK_THROWS_AS(decode_term(Json::parse(R"(["a","a"])"), order), DecodeError);
  CHECK_THROWS_AS(decode_term(Json::parse(R"(3)"), order), DecodeError);
  CHECK_THROWS_AS(decode_term(Json::parse(R"({"sum":"middle","t":["a"]})"),
                              Shape{Kind::Tagged, {order, order}}),
                  DecodeError);
  CHECK_THROWS_AS(decode_vec(Json::parse(R"([{"c":1,"t":["a"]}])"), order), DecodeError);
  CHECK_THROWS_AS(
      decode_term(Json::parse(
                      R"({"partition":[["a"]],"outer":[["b"]],"inner":[{"block":["a"],"term":["a"]}]})"),
                  Shape{Kind::Composite, {star, star}}),
      DecodeError);
}
