#include "species/expr.hpp"

#include <cctype>

#include "species/errors.hpp"
#include "species/ops.hpp"
#include "species/zoo.hpp"

namespace species {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
    } else if (s.compare(i, 2, ">=") == 0) {
      out.push_back({Token::Punct, ">=", i});
      i += 2;
    } else if (std::string("+.*()[]{},=<").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

const std::vector<std::string> kPlain = {"One", "cyc", "Pi"};
const std::vector<std::string> kSuffixable = {"E", "L", "G", "Pos"};

bool one_of(const std::string& s, const std::vector<std::string>& v) {
  for (const auto& x : v)
    if (x == s) return true;
  return false;
}

Expr binary(Expr::Op op, Expr l, Expr r) {
  Expr e;
  e.op = op;
  e.kids = {std::move(l), std::move(r)};
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Expr parse() {
    Expr e = sum();
    if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool is_punct(const std::string& p, std::size_t k = 0) const {
    return peek(k).kind == Token::Punct && peek(k).text == p;
  }
  bool starts_operand(std::size_t k) const {
    const Token& t = peek(k);
    return (t.kind == Token::Ident && t.text != "o") || (t.kind == Token::Punct && t.text == "(");
  }
  void expect(const std::string& p) {
    if (!is_punct(p)) {
      const Token& t = peek();
      throw ParseError("expected '" + p + "' but found " +
                           (t.kind == Token::End ? std::string("end of input") : "'" + t.text + "'"),
                       t.offset);
    }
    ++pos_;
  }
  std::size_t number() {
    if (peek().kind != Token::Number) throw ParseError("expected a number", peek().offset);
    return std::stoul(toks_[pos_++].text);
  }

  Expr sum() {
    Expr e = cauchy();
    while (is_punct("+")) {
      ++pos_;
      e = binary(Expr::Op::Sum, std::move(e), cauchy());
    }
    return e;
  }
  Expr cauchy() {
    Expr e = hadamard();
    while (is_punct(".")) {
      ++pos_;
      e = binary(Expr::Op::Cauchy, std::move(e), hadamard());
    }
    return e;
  }
  Expr hadamard() {
    Expr e = subst();
    while (is_punct("*")) {
      ++pos_;
      e = binary(Expr::Op::Hadamard, std::move(e), subst());
    }
    return e;
  }
  Expr subst() {
    Expr e = primary();
    while (peek().kind == Token::Ident && peek().text == "o") {
      ++pos_;
      e = binary(Expr::Op::Subst, std::move(e), primary());
    }
    return e;
  }

  Expr primary() {
    const Token t = peek();
    if (is_punct("(")) {
      ++pos_;
      Expr e = sum();
      expect(")");
      return e;
    }
    if (t.kind != Token::Ident || t.text == "o")
      throw ParseError(t.kind == Token::End ? "unexpected end of input"
                                            : "expected an operand, found '" + t.text + "'",
                       t.offset);
    ++pos_;
    if (t.text == "T" && is_punct("[")) {
      ++pos_;
      Expr e;
      e.op = Expr::Op::Tee;
      e.kids.push_back(sum());
      expect("]");
      expect("(");
      e.kids.push_back(sum());
      expect(")");
      return e;
    }
    if (t.text == "R" && is_punct("{")) {
      ++pos_;
      Expr e;
      e.op = Expr::Op::Interp;
      e.r = number();
      expect("}");
      expect("[");
      e.kids.push_back(sum());
      expect(",");
      e.kids.push_back(sum());
      expect("]");
      expect("(");
      e.kids.push_back(sum());
      expect(",");
      e.kids.push_back(sum());
      expect(")");
      return e;
    }
    if (t.text == "trunc" && is_punct("(")) {
      ++pos_;
      Expr e;
      e.op = Expr::Op::Trunc;
      e.kids.push_back(sum());
      expect(",");
      if (is_punct("="))
        e.cmp = TruncMode::Exactly;
      else if (is_punct("<"))
        e.cmp = TruncMode::Below;
      else if (is_punct(">="))
        e.cmp = TruncMode::AtLeast;
      else
        throw ParseError("expected one of = < >=", peek().offset);
      ++pos_;
      expect(",");
      e.n = number();
      expect(")");
      return e;
    }
    Expr e;
    e.atom = t.text;
    if (one_of(t.text, kSuffixable)) {
      if (is_punct("+") && !starts_operand(1)) {
        ++pos_;
        e.atom += "+";
      }
      return e;
    }
    if (one_of(t.text, kPlain)) return e;
    throw ParseError("unknown species '" + t.text + "'", t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Sum: return 1;
    case Expr::Op::Cauchy: return 2;
    case Expr::Op::Hadamard: return 3;
    case Expr::Op::Subst: return 4;
    default: return 5;
  }
}

const char* symbol(Expr::Op op) {
  switch (op) {
    case Expr::Op::Sum: return " + ";
    case Expr::Op::Cauchy: return " . ";
    case Expr::Op::Hadamard: return " * ";
    default: return " o ";
  }
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Atom: return e.atom;
    case Expr::Op::Tee: return "T[" + print_expr(e.kids[0]) + "](" + print_expr(e.kids[1]) + ")";
    case Expr::Op::Interp:
      return "R{" + std::to_string(e.r) + "}[" + print_expr(e.kids[0]) + "," +
             print_expr(e.kids[1]) + "](" + print_expr(e.kids[2]) + "," + print_expr(e.kids[3]) +
             ")";
    case Expr::Op::Trunc: {
      const char* cmp = e.cmp == TruncMode::Exactly ? "=" : e.cmp == TruncMode::Below ? "<" : ">=";
      return "trunc(" + print_expr(e.kids[0]) + ", " + cmp + ", " + std::to_string(e.n) + ")";
    }
    default: {
      int p = precedence(e);
      std::string l = print_expr(e.kids[0]), r = print_expr(e.kids[1]);
      if (precedence(e.kids[0]) < p) l = "(" + l + ")";
      if (precedence(e.kids[1]) <= p) r = "(" + r + ")";
      return l + symbol(e.op) + r;
    }
  }
}

// --- evaluation ---------------------------------------------------------------

std::optional<SpeciesMap> registered_tau(const std::string& b, const std::string& d) {
  if (b == "G" && d == "E") return tau_GE();
  if (b == "L" && d == "E") return tau_LE();
  if (b == "E" && d == "Pos") return alpha();
  return std::nullopt;
}

std::optional<SpeciesMap> registered_theta(const std::string& p, const std::string& q) {
  if (p == "L+" && q == "cyc") return theta_Lcyc();
  if (p == "G+" && q == "E+") return forget_edges();
  if (p == "L+" && q == "E+") return forget_order();
  if (p == "E+" && q == "Pos+") return alpha_plus();
  return std::nullopt;
}

namespace {

Evaluated from_bimonoid(Bimonoid h) {
  Evaluated out{h.species, h, h.comonoid(), std::nullopt, std::nullopt};
  return out;
}

Evaluated from_comonoid(Comonoid c) {
  return Evaluated{c.species, std::nullopt, c, std::nullopt, std::nullopt};
}

Evaluated from_species(Species s) {
  return Evaluated{std::move(s), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

Evaluated atom(const std::string& name) {
  if (name == "One") return from_bimonoid(hopf_One());
  if (name == "E") return from_bimonoid(hopf_E());
  if (name == "L") return from_bimonoid(hopf_L());
  if (name == "G") return from_bimonoid(hopf_G());
  if (name == "Pos") return from_bimonoid(hopf_Poset());
  if (name == "E+") return from_comonoid(positive_part(hopf_E()));
  if (name == "L+") return from_comonoid(positive_part(hopf_L()));
  if (name == "G+") return from_comonoid(positive_part(hopf_G()));
  if (name == "Pos+") return from_comonoid(positive_part(hopf_Poset()));
  if (name == "cyc") return from_comonoid(comonoid_cyc());
  if (name == "Pi") {
    Tee t = build_tee(hopf_E(), positive_part(hopf_E()));
    Evaluated out = from_bimonoid(t.hopf);
    out.tee = std::move(t);
    return out;
  }
  throw SemanticError("unknown species", name);
}

const Bimonoid& need_bimonoid(const Evaluated& v, const Expr& at, const char* role) {
  if (!v.bimonoid)
    throw SemanticError(std::string(role) + " must be a bimonoid", print_expr(at));
  return *v.bimonoid;
}

const Comonoid& need_comonoid(const Evaluated& v, const Expr& at, const char* role) {
  if (!v.comonoid)
    throw SemanticError(std::string(role) + " must carry a coproduct", print_expr(at));
  return *v.comonoid;
}

SpeciesMap resolve(std::optional<SpeciesMap> registered, const Species& from, const Species& to,
                   const Expr& at, const char* what) {
  if (from.name() == to.name()) return identity_map(from);
  if (registered) return *registered;
  throw SemanticError(std::string("no registered ") + what + " from " + from.name() + " to " +
                          to.name(),
                      print_expr(at));
}

Evaluated eval(const Expr& e) {
  const std::string path = print_expr(e);
  try {
    switch (e.op) {
      case Expr::Op::Atom: return atom(e.atom);
      case Expr::Op::Sum: {
        Evaluated a = eval(e.kids[0]), b = eval(e.kids[1]);
        return from_species(sum_species(a.species, b.species));
      }
      case Expr::Op::Hadamard: {
        Evaluated a = eval(e.kids[0]), b = eval(e.kids[1]);
        return from_species(hadamard_species(a.species, b.species));
      }
      case Expr::Op::Cauchy: {
        Evaluated a = eval(e.kids[0]), b = eval(e.kids[1]);
        if (a.bimonoid && b.bimonoid && a.species.connected() && b.species.connected())
          return from_bimonoid(cauchy_bimonoid(*a.bimonoid, *b.bimonoid));
        return from_species(cauchy_species(a.species, b.species));
      }
      case Expr::Op::Subst: {
        Evaluated a = eval(e.kids[0]), b = eval(e.kids[1]);
        if (!b.species.positive())
          throw SemanticError("substitution argument " + print_expr(e.kids[1]) +
                                  " is not positive",
                              path);
        return from_species(substitute_species(a.species, b.species));
      }
      case Expr::Op::Tee: {
        Evaluated a = eval(e.kids[0]), b = eval(e.kids[1]);
        Tee t = build_tee(need_bimonoid(a, e.kids[0], "the outer argument of T"),
                          need_comonoid(b, e.kids[1], "the inner argument of T"));
        Evaluated out = from_bimonoid(t.hopf);
        out.tee = std::move(t);
        return out;
      }
      case Expr::Op::Interp: {
        std::vector<Evaluated> v;
        for (const auto& k : e.kids) v.push_back(eval(k));
        const Bimonoid& b = need_bimonoid(v[0], e.kids[0], "b");
        const Bimonoid& d = need_bimonoid(v[1], e.kids[1], "d");
        Comonoid p = need_comonoid(v[2], e.kids[2], "p");
        const Comonoid& q = need_comonoid(v[3], e.kids[3], "q");
        SpeciesMap tau = resolve(registered_tau(b.species.name(), d.species.name()), b.species,
                                 d.species, e, "tau");
        SpeciesMap theta = resolve(registered_theta(p.species.name(), q.species.name()),
                                   p.species, q.species, e, "theta");
        // θ may be certified against a different coproduct on the same species.
        if (theta.source.name() != p.species.name() && theta.source.name() == "Ltriv+")
          p = comonoid_L_trivial();
        RTee rt = build_rtee(e.r, InterpolationData{b, d, p, q, tau, theta});
        Evaluated out = from_bimonoid(rt.quotient);
        out.rtee = std::move(rt);
        return out;
      }
      case Expr::Op::Trunc: {
        Evaluated a = eval(e.kids[0]);
        Truncation t{e.cmp, e.n};
        if (a.comonoid) return from_comonoid(truncate(*a.comonoid, t));
        return from_species(truncate(a.species, t));
      }
    }
  } catch (const HypothesisError& err) {
    throw SemanticError(std::string("construction refused (missing hypothesis: ") +
                            err.hypothesis() + "): " + err.what(),
                        path);
  } catch (const PreconditionError& err) {
    throw SemanticError(err.what(), path);
  }
  throw SemanticError("unsupported expression", path);
}

}  // namespace

Evaluated evaluate(const Expr& e) { return eval(e); }
Evaluated evaluate(const std::string& text) { return eval(parse_expr(text)); }

}  // namespace species
