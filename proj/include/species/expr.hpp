#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "species/interpolation.hpp"
#include "species/structure.hpp"
#include "species/substitution.hpp"

namespace species {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A well-formed expression that does not denote anything, e.g. a
// substitution into a non-positive species. path() is the offending
// subexpression in canonical form.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(const std::string& what, std::string path)
      : std::runtime_error(what + " in '" + path + "'"), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Species expressions.
///
///   atoms      One E E+ L L+ G G+ cyc Pos Pos+ Pi
///   binary     a + b (sum), a . b (Cauchy), a * b (Hadamard), a o b (substitution)
///   forms      T[b](p), R{r}[b,d](p,q), trunc(a, cmp, n) with cmp one of = < >=
///
/// Binding: o tighter than *, * tighter than ., . tighter than +; all left
/// associative. A '+' right after E, L, G or Pos is the positive-part suffix
/// unless an operand follows it.
struct Expr {
  enum class Op { Atom, Sum, Cauchy, Hadamard, Subst, Tee, Interp, Trunc };
  Op op = Op::Atom;
  std::string atom;  // Atom
  std::vector<Expr> kids;
  std::size_t r = 0;  // Interp
  TruncMode cmp = TruncMode::Exactly;  // Trunc: Exactly, Below or AtLeast
  std::size_t n = 0;                   // Trunc

  bool operator==(const Expr&) const = default;
};

Expr parse_expr(const std::string& text);
// Canonical form with the fewest parentheses; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// What an expression denotes: always a species, plus whatever structure
/// the construction provides.
struct Evaluated {
  Species species;
  std::optional<Bimonoid> bimonoid;
  std::optional<Comonoid> comonoid;  // set whenever bimonoid is, too
  std::optional<Tee> tee;
  std::optional<RTee> rtee;
};

// Throws SemanticError, with HypothesisError and PreconditionError from the
// constructions converted to it.
Evaluated evaluate(const Expr& e);
Evaluated evaluate(const std::string& text);

// τ for R{r}[b,d]: G→E, L→E, E→Pos. evaluate uses the identity when b = d.
std::optional<SpeciesMap> registered_tau(const std::string& b, const std::string& d);
// θ for R{r}[..](p,q): L+→cyc, G+→E+, L+→E+, E+→Pos+. Identity when p = q, as for τ.
std::optional<SpeciesMap> registered_theta(const std::string& p, const std::string& q);

}  // namespace species
