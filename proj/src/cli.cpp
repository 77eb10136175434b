#include "species/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "species/errors.hpp"
#include "species/expr.hpp"
#include "species/interpolation.hpp"
#include "species/morphisms.hpp"
#include "species/term_json.hpp"
#include "species/verify.hpp"

namespace species {

std::size_t capped_max_n(std::size_t requested) {
  std::size_t cap = 4;
  if (const char* env = std::getenv("SPECIES_MAX_N")) {
    try {
      cap = std::stoul(env);
    } catch (const std::exception&) {
    }
  }
  return std::min(requested, cap);
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::string set;
  std::string term;
  std::string left;
  std::string right;
  std::string split;
  std::string law;
  std::string fault;
  std::size_t max_n = 4;
  bool json = false;
};

Term read_term(const std::string& text, const Species& s) {
  if (text.empty()) throw UsageError("a term is required");
  return decode_term(Json::parse(text), s.shape());
}

void print_vec(std::ostream& out, const Vec& v, bool json) {
  out << (json ? encode(v).dump() : to_string(v)) << "\n";
}

const Bimonoid& need_bimonoid(const Evaluated& v) {
  if (!v.bimonoid) throw UsageError(v.species.name() + " carries no bimonoid structure");
  return *v.bimonoid;
}

const Comonoid& need_comonoid(const Evaluated& v) {
  if (!v.comonoid) throw UsageError(v.species.name() + " carries no coproduct");
  return *v.comonoid;
}

const RTee& need_rtee(const Evaluated& v, const std::string& law) {
  if (!v.rtee) throw UsageError("law '" + law + "' needs an interpolation expression R{r}[b,d](p,q)");
  return *v.rtee;
}

// Scales μ(x, y) by 2 when x lives on one label and y is nonempty (breaks
// associativity), or Δ_{S,T} by 2 when |S| = 1 and T is nonempty.
void inject_fault(Evaluated& v, const std::string& fault) {
  if (fault.empty()) return;
  if (fault == "mu") {
    Bimonoid h = need_bimonoid(v);
    h.mu = [mu = h.mu](const Term& x, const Term& y) {
      Vec out = mu(x, y);
      return x.ground().size() == 1 && !y.ground().empty() ? Rational(2) * out : out;
    };
    v.bimonoid = h;
    v.comonoid = h.comonoid();
  } else if (fault == "delta") {
    Comonoid c = need_comonoid(v);
    c.delta = [delta = c.delta](const Term& x, const LabelSet& s, const LabelSet& t) {
      Vec2 out = delta(x, s, t);
      return s.size() == 1 && !t.empty() ? Rational(2) * out : out;
    };
    v.comonoid = c;
    if (v.bimonoid) v.bimonoid->delta = c.delta;
  } else {
    throw UsageError("unknown fault '" + fault + "' (expected mu or delta)");
  }
}

Report run_law(const Evaluated& v, const std::string& law, std::size_t n) {
  if (law == "assoc") return check_associativity(need_bimonoid(v).monoid(), n);
  if (law == "coassoc") return check_coassociativity(need_comonoid(v), n);
  if (law == "compat") return check_compatibility(need_bimonoid(v), n);
  if (law == "antipode") return check_antipode(need_bimonoid(v), n);
  if (law == "comm") return check_commutativity(need_bimonoid(v).monoid(), n);
  if (law == "cocomm") return check_cocommutativity(need_comonoid(v), n);
  if (law == "coherence" || law == "restriction" || law == "identity") {
    const Bimonoid& h = need_bimonoid(v);
    if (!h.restriction) throw UsageError(h.species.name() + " carries no restrictions");
    if (law == "coherence") return check_coherence(h.monoid(), *h.restriction, n);
    if (law == "restriction") return check_restriction_axioms(h.species, *h.restriction, n);
    return check_restriction_identity(h, n);
  }
  if (law == "hopf") {
    const Bimonoid& h = need_bimonoid(v);
    return combine("Hopf monoid axioms", h.species.name(),
                   {check_associativity(h.monoid(), n), check_coassociativity(h.comonoid(), n),
                    check_compatibility(h, n), check_antipode(h, n)});
  }
  if (law == "morphism") {
    if (v.rtee) return check_port_morphisms(*v.rtee, n);
    if (v.tee)
      return combine("embeddings", v.tee->hopf.species.name(),
                     {check_embed_b(*v.tee, n), check_embed_p(*v.tee, n)});
    throw UsageError("law 'morphism' needs a T[b](p) or R{r}[b,d](p,q) expression");
  }
  if (law == "ideal") return check_ideal(need_rtee(v, law), n);
  if (law == "coideal") return check_coideal(need_rtee(v, law), n);
  if (law == "dims") return check_quotient_dims(need_rtee(v, law), n);
  if (law == "confluence") return check_confluence(need_rtee(v, law), n);
  if (law == "collapse") return check_collapses(need_rtee(v, law).data, n);
  if (law == "ports") {
    const RTee& rt = need_rtee(v, law);
    RTee next = build_rtee(rt.r + 1, rt.data);
    return combine("ports", rt.quotient.species.name(),
                   {check_port_identities(rt, next, n), check_port_between(rt, next, n),
                    check_surjectivity_transfer(rt, n)});
  }
  throw UsageError("unknown law '" + law + "'");
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  Evaluated v = evaluate(o.expr);
  const auto& basis = v.species.basis(LabelSet::parse(o.set));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& t : basis) arr.push_back(encode(t));
    out << arr.dump() << "\n";
  } else {
    for (const auto& t : basis) out << t.to_string() << "\n";
  }
  return kPass;
}

int cmd_dim(const Options& o, std::ostream& out) {
  Expr e = parse_expr(o.expr);
  Evaluated v = evaluate(e);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= o.max_n; ++n) dims.push_back(v.species.dim(n));
  if (o.json) {
    out << Json{{"expr", print_expr(e)}, {"dims", dims}}.dump() << "\n";
  } else {
    for (std::size_t n = 0; n < dims.size(); ++n) out << n << " " << dims[n] << "\n";
  }
  return kPass;
}

int cmd_mu(const Options& o, std::ostream& out) {
  Evaluated v = evaluate(o.expr);
  const Bimonoid& h = need_bimonoid(v);
  Term x = read_term(o.left, v.species), y = read_term(o.right, v.species);
  if (!x.ground().disjoint_from(y.ground()))
    throw DomainError("the two terms must live on disjoint sets");
  print_vec(out, h.mu(x, y), o.json);
  return kPass;
}

int cmd_delta(const Options& o, std::ostream& out) {
  Evaluated v = evaluate(o.expr);
  const Comonoid& c = need_comonoid(v);
  Term x = read_term(o.term, v.species);
  LabelSet s = LabelSet::parse(o.split);
  if (!s.subset_of(x.ground()))
    throw DomainError(s.to_string() + " is not a subset of " + x.ground().to_string());
  Vec2 d = c.delta(x, s, x.ground().minus(s));
  out << (o.json ? encode(d).dump() : to_string(d)) << "\n";
  return kPass;
}

int cmd_antipode(const Options& o, std::ostream& out) {
  Evaluated v = evaluate(o.expr);
  const Bimonoid& h = need_bimonoid(v);
  if (!h.species.connected()) throw UsageError(h.species.name() + " is not connected");
  AntipodeSolver s(h);
  print_vec(out, s(read_term(o.term, v.species)), o.json);
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::size_t n = capped_max_n(o.max_n);
  if (n < o.max_n) err << "note: n_max capped to " << n << " by SPECIES_MAX_N\n";
  Evaluated v = evaluate(o.expr);
  inject_fault(v, o.fault);
  Report r = run_law(v, o.law, n);
  out << (o.json ? r.to_json().dump(2) : r.to_text()) << "\n";
  return r.passed ? kPass : kViolated;
}

int cmd_interp(const Options& o, std::ostream& out, std::ostream& err) {
  std::size_t n = capped_max_n(o.max_n);
  if (n < o.max_n) err << "note: n_max capped to " << n << " by SPECIES_MAX_N\n";
  Evaluated v = evaluate(o.expr);
  const RTee& rt = need_rtee(v, "interp");
  Json j{{"quotient", rt.quotient.species.name()}, {"r", rt.r}};
  Json rows = Json::array();
  bool ok = true;
  for (const auto& row : quotient_dims(rt, n)) {
    rows.push_back({{"n", row.n},
                    {"ambient", row.ambient},
                    {"rank", row.generators_rank},
                    {"carrier", row.carrier}});
    ok = ok && row.ambient - row.generators_rank == row.carrier;
  }
  j["dims"] = rows;
  std::optional<Vec> port, hf;
  if (!o.term.empty()) {
    Term x = read_term(o.term, rt.upper.hopf.species);
    port = port_lower(rt)(x);
    hf = hat_f(rt)(x);
    j["port"] = encode(*port);
    j["hat_f"] = encode(*hf);
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << rt.quotient.species.name() << "\n";
    out << "n ambient rank carrier\n";
    for (const auto& row : rows)
      out << row["n"] << " " << row["ambient"] << " " << row["rank"] << " " << row["carrier"]
          << "\n";
    if (port) out << "port_" << rt.r << ": " << to_string(*port) << "\nhat_f: " << to_string(*hf)
                  << "\n";
  }
  return ok ? kPass : kViolated;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Hopf monoids in vector species", "species"};
  app.require_subcommand(1);
  Options o;
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr,-e", o.expr, "species expression, e.g. T[G](L+)")->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* en = app.add_subcommand("enumerate", "list the basis on a label set");
  add_expr(en);
  en->add_option("--set,-s", o.set, "comma-separated labels");
  add_json(en);

  auto* dim = app.add_subcommand("dim", "dimensions in degrees 0..max-n");
  add_expr(dim);
  dim->add_option("--max-n,-n", o.max_n, "largest degree");
  add_json(dim);

  auto* mu = app.add_subcommand("mu", "product of two terms on disjoint sets");
  add_expr(mu);
  mu->add_option("--left", o.left, "term JSON")->required();
  mu->add_option("--right", o.right, "term JSON")->required();
  add_json(mu);

  auto* delta = app.add_subcommand("delta", "coproduct at the split S | I - S");
  add_expr(delta);
  delta->add_option("--term,-t", o.term, "term JSON")->required();
  delta->add_option("--split", o.split, "comma-separated labels of S")->required();
  add_json(delta);

  auto* anti = app.add_subcommand("antipode", "antipode of a term");
  add_expr(anti);
  anti->add_option("--term,-t", o.term, "term JSON")->required();
  add_json(anti);

  auto* ver = app.add_subcommand("verify", "check a law exhaustively up to max-n");
  add_expr(ver);
  ver->add_option("--law,-l", o.law,
                  "assoc coassoc compat antipode comm cocomm coherence restriction identity "
                  "hopf morphism ideal coideal dims confluence collapse ports")
      ->required();
  ver->add_option("--max-n,-n", o.max_n, "largest degree (capped by SPECIES_MAX_N)");
  ver->add_option("--inject-fault", o.fault, "corrupt mu or delta before checking");
  add_json(ver);

  auto* interp = app.add_subcommand("interp", "quotient dimensions and port maps");
  add_expr(interp);
  interp->add_option("--max-n,-n", o.max_n, "largest degree (capped by SPECIES_MAX_N)");
  interp->add_option("--term,-t", o.term, "a term of T[b](p) to send through port_r and hat_f");
  add_json(interp);

  std::vector<std::string> argv_store{"species"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(o, out);
    if (*dim) return cmd_dim(o, out);
    if (*mu) return cmd_mu(o, out);
    if (*delta) return cmd_delta(o, out);
    if (*anti) return cmd_antipode(o, out);
    if (*ver) return cmd_verify(o, out, err);
    if (*interp) return cmd_interp(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const SemanticError& e) {
    err << "semantic error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "bad JSON: " << e.what() << "\n";
  } catch (const DecodeError& e) {
    err << "bad term: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const HypothesisError& e) {
    err << "refused (" << e.hypothesis() << "): " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace species
