#include "species/verify.hpp"

#include <algorithm>
#include <functional>

#include "species/errors.hpp"
#include "species/linalg.hpp"

namespace species {

std::string Report::to_text() const {
  std::string out = law + " [" + subject + "] n<=" + std::to_string(n_max) + ": " +
                    (passed ? "PASS" : "FAIL") + " (" + std::to_string(cases) + " cases)";
  if (!message.empty()) out += "\n  " + message;
  if (witness) out += "\n  witness: " + witness->dump();
  return out;
}

Json Report::to_json() const {
  Json j{{"law", law}, {"subject", subject}, {"passed", passed}, {"n_max", n_max},
         {"cases", cases}};
  if (!message.empty()) j["message"] = message;
  if (witness) j["witness"] = *witness;
  return j;
}

namespace {

Json set_json(const LabelSet& s) {
  Json arr = Json::array();
  for (const auto& l : s) arr.push_back(encode_label(l));
  return arr;
}

// Accumulates a report; the first failure wins.
class Checker {
 public:
  Checker(std::string law, std::string subject, std::size_t n_max) {
    r_.law = std::move(law);
    r_.subject = std::move(subject);
    r_.n_max = n_max;
  }

  void tick() { ++r_.cases; }
  bool failed() const { return !r_.passed; }

  void fail(std::string message, Json witness) {
    if (!r_.passed) return;
    r_.passed = false;
    r_.message = std::move(message);
    r_.witness = std::move(witness);
  }

  Report done() { return std::move(r_); }

 private:
  Report r_;
};

std::vector<Decomposition> splits(const LabelSet& ground, std::size_t k, bool nonempty) {
  auto all = enumerate_decompositions(ground, k);
  if (!nonempty) return all;
  std::vector<Decomposition> out;
  for (auto& d : all) {
    bool ok = true;
    for (const auto& p : d.parts) ok = ok && !p.empty();
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

Vec2 relabel_tensors(const Vec2& v, const Bijection& sigma) {
  Vec2 out;
  for (const auto& [t, c] : v) {
    Tensor u;
    for (const auto& f : t) u.push_back(f.relabel(sigma));
    out.add(u, c);
  }
  return out;
}

Vec restrict_vec(const RestrictionFn& rho, const Vec& v, const LabelSet& u) {
  Vec out;
  for (const auto& [t, c] : v) out.add(rho(t, u), c);
  return out;
}

}  // namespace

Report combine(std::string law, std::string subject, const std::vector<Report>& parts) {
  Report out;
  out.law = std::move(law);
  out.subject = std::move(subject);
  for (const auto& r : parts) {
    out.cases += r.cases;
    out.n_max = std::max(out.n_max, r.n_max);
    if (out.passed && !r.passed) {
      out.passed = false;
      out.message = r.law + ": " + r.message;
      out.witness = r.witness;
    }
  }
  return out;
}

Report check_associativity(const Monoid& m, std::size_t n_max) {
  Checker ck("associativity", m.species.name(), n_max);
  for (std::size_t n = 0; n <= n_max && !ck.failed(); ++n) {
    for (const auto& d : enumerate_decompositions(canonical_labels(n), 3)) {
      for (const auto& x : m.species.basis(d[0]))
        for (const auto& y : m.species.basis(d[1]))
          for (const auto& z : m.species.basis(d[2])) {
            ck.tick();
            Vec lhs = product(m.mu, m.mu(x, y), Vec(z));
            Vec rhs = product(m.mu, Vec(x), m.mu(y, z));
            if (lhs != rhs) {
              ck.fail("mu(mu(x,y),z) != mu(x,mu(y,z))",
                      Json{{"R", set_json(d[0])}, {"S", set_json(d[1])}, {"T", set_json(d[2])},
                           {"x", encode(x)}, {"y", encode(y)}, {"z", encode(z)},
                           {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
              return ck.done();
            }
          }
    }
  }
  return ck.done();
}

Report check_coassociativity(const Comonoid& c, std::size_t n_max) {
  Checker ck("coassociativity", c.species.name(), n_max);
  bool positive = c.species.positive();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& d : splits(ground, 3, positive)) {
      const auto &r = d[0], &s = d[1], &t = d[2];
      for (const auto& x : c.species.basis(ground)) {
        ck.tick();
        auto lhs = split_factor(c.delta(x, r.unite(s), t), 0, c.delta, r, s);
        auto rhs = split_factor(c.delta(x, r, s.unite(t)), 1, c.delta, s, t);
        if (lhs != rhs) {
          ck.fail("(Delta x id) Delta != (id x Delta) Delta",
                  Json{{"R", set_json(r)}, {"S", set_json(s)}, {"T", set_json(t)},
                       {"x", encode(x)}, {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_compatibility(const Bimonoid& h, std::size_t n_max) {
  Checker ck("compatibility", h.species.name(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    auto decs = enumerate_decompositions(ground, 2);
    for (const auto& st : decs) {
      const auto &s = st[0], &t = st[1];
      for (const auto& x : h.species.basis(s))
        for (const auto& y : h.species.basis(t)) {
          Vec xy = h.mu(x, y);
          for (const auto& st2 : decs) {
            const auto &s2 = st2[0], &t2 = st2[1];
            ck.tick();
            Vec2 lhs = coproduct(h.delta, xy, s2, t2);
            Vec2 rhs = product_of_tensors(h.mu, h.delta(x, s.intersect(s2), s.intersect(t2)),
                                          h.delta(y, t.intersect(s2), t.intersect(t2)));
            if (lhs != rhs) {
              ck.fail("Delta_{S',T'} mu_{S,T} != (mu x mu)(id x swap x id)(Delta_{A,B} x Delta_{C,D})",
                      Json{{"S", set_json(s)}, {"T", set_json(t)}, {"S'", set_json(s2)},
                           {"T'", set_json(t2)}, {"x", encode(x)}, {"y", encode(y)},
                           {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
              return ck.done();
            }
          }
        }
    }
  }
  return ck.done();
}

Report check_commutativity(const Monoid& m, std::size_t n_max) {
  Checker ck("commutativity", m.species.name(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& d : enumerate_decompositions(canonical_labels(n), 2)) {
      for (const auto& x : m.species.basis(d[0]))
        for (const auto& y : m.species.basis(d[1])) {
          ck.tick();
          Vec lhs = m.mu(x, y), rhs = m.mu(y, x);
          if (lhs != rhs) {
            ck.fail("mu(x,y) != mu(y,x)", Json{{"x", encode(x)}, {"y", encode(y)},
                                                {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
            return ck.done();
          }
        }
    }
  }
  return ck.done();
}

Report check_cocommutativity(const Comonoid& c, std::size_t n_max) {
  Checker ck("cocommutativity", c.species.name(), n_max);
  bool positive = c.species.positive();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& d : splits(ground, 2, positive)) {
      for (const auto& x : c.species.basis(ground)) {
        ck.tick();
        Vec2 lhs = c.delta(x, d[1], d[0]);
        Vec2 rhs = swap_factors(c.delta(x, d[0], d[1]));
        if (lhs != rhs) {
          ck.fail("Delta_{T,S} != swap Delta_{S,T}",
                  Json{{"S", set_json(d[0])}, {"T", set_json(d[1])}, {"x", encode(x)},
                       {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_linearized_product(const Monoid& m, std::size_t n_max) {
  Checker ck("linearized product", m.species.name(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& d : enumerate_decompositions(canonical_labels(n), 2)) {
      for (const auto& x : m.species.basis(d[0]))
        for (const auto& y : m.species.basis(d[1])) {
          ck.tick();
          Vec v = m.mu(x, y);
          if (!v.is_basis_element()) {
            ck.fail("mu(x,y) is not a single basis term",
                    Json{{"x", encode(x)}, {"y", encode(y)}, {"value", encode(v)}});
            return ck.done();
          }
        }
    }
  }
  return ck.done();
}

Report check_linearized_coproduct(const Comonoid& c, std::size_t n_max) {
  Checker ck("linearized coproduct", c.species.name(), n_max);
  bool positive = c.species.positive();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& d : splits(ground, 2, positive)) {
      for (const auto& x : c.species.basis(ground)) {
        ck.tick();
        Vec2 v = c.delta(x, d[0], d[1]);
        if (!v.is_basis_element()) {
          ck.fail("Delta_{S,T}(x) is not a single basis tensor",
                  Json{{"S", set_json(d[0])}, {"T", set_json(d[1])}, {"x", encode(x)},
                       {"value", encode(v)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_restriction_axioms(const Species& s, const RestrictionFn& rho, std::size_t n_max) {
  Checker ck("restriction axioms", s.name(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& x : s.basis(ground)) {
      ck.tick();
      if (rho(x, ground) != x) {
        ck.fail("rho^I_I(x) != x", Json{{"x", encode(x)}});
        return ck.done();
      }
      for (const auto& d : enumerate_decompositions(ground, 3)) {
        const LabelSet& u = d[0];
        LabelSet v = d[0].unite(d[1]);
        if (s.positive() && u.empty()) continue;
        ck.tick();
        Term xv = rho(x, v);
        Term lhs = rho(xv, u), rhs = rho(x, u);
        if (!s.contains(xv) || lhs != rhs) {
          ck.fail(s.contains(xv) ? "rho^V_U rho^I_V != rho^I_U" : "rho^I_V(x) is not a basis term",
                  Json{{"U", set_json(u)}, {"V", set_json(v)}, {"x", encode(x)},
                       {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_coherence(const Monoid& m, const RestrictionFn& rho, std::size_t n_max) {
  Checker ck("coherence", m.species.name(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    auto decs = enumerate_decompositions(ground, 2);
    for (const auto& st : decs) {
      for (const auto& x : m.species.basis(st[0]))
        for (const auto& y : m.species.basis(st[1])) {
          Vec xy = m.mu(x, y);
          for (const auto& uv : decs) {
            const LabelSet& u = uv[0];
            ck.tick();
            Vec lhs = restrict_vec(rho, xy, u);
            Vec rhs = m.mu(rho(x, u.intersect(st[0])), rho(y, u.intersect(st[1])));
            if (lhs != rhs) {
              ck.fail("rho_U mu(x,y) != mu(rho x, rho y)",
                      Json{{"U", set_json(u)}, {"x", encode(x)}, {"y", encode(y)},
                           {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
              return ck.done();
            }
          }
        }
    }
  }
  return ck.done();
}

Report check_coproduct_from_restrictions(const Comonoid& c, std::size_t n_max) {
  Checker ck("coproduct from restrictions", c.species.name(), n_max);
  if (!c.restriction) {
    ck.fail("no restriction structure", nullptr);
    return ck.done();
  }
  const auto& rho = *c.restriction;
  bool positive = c.species.positive();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& d : splits(ground, 2, positive)) {
      for (const auto& x : c.species.basis(ground)) {
        ck.tick();
        Vec2 lhs = c.delta(x, d[0], d[1]);
        Vec2 rhs(Tensor{rho(x, d[0]), rho(x, d[1])});
        if (lhs != rhs) {
          ck.fail("Delta_{S,T}(x) != rho_S(x) (x) rho_T(x)",
                  Json{{"S", set_json(d[0])}, {"T", set_json(d[1])}, {"x", encode(x)},
                       {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_naturality(const Bimonoid& h, std::size_t n_max) {
  Checker ck("naturality", h.species.name(), n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    auto decs = enumerate_decompositions(ground, 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Bijection sigma = Bijection::adjacent_transposition(ground, i);
      for (const auto& d : decs) {
        for (const auto& x : h.species.basis(d[0]))
          for (const auto& y : h.species.basis(d[1])) {
            ck.tick();
            Vec lhs = relabel(h.mu(x, y), sigma);
            Vec rhs = h.mu(x.relabel(sigma), y.relabel(sigma));
            if (lhs != rhs) {
              ck.fail("sigma mu(x,y) != mu(sigma x, sigma y)",
                      Json{{"x", encode(x)}, {"y", encode(y)}, {"lhs", encode(lhs)},
                           {"rhs", encode(rhs)}});
              return ck.done();
            }
          }
        for (const auto& x : h.species.basis(ground)) {
          ck.tick();
          Vec2 lhs = relabel_tensors(h.delta(x, d[0], d[1]), sigma);
          Vec2 rhs = h.delta(x.relabel(sigma), sigma(d[0]), sigma(d[1]));
          if (lhs != rhs) {
            ck.fail("(sigma x sigma) Delta != Delta sigma",
                    Json{{"S", set_json(d[0])}, {"x", encode(x)}, {"lhs", encode(lhs)},
                         {"rhs", encode(rhs)}});
            return ck.done();
          }
        }
      }
    }
  }
  return ck.done();
}

Report check_restriction_identity(const Bimonoid& b, std::size_t n_max) {
  Checker ck("restriction identity", b.species.name(), n_max);
  // λ^K_U: left factor of Δ_{U, K∖U}; ρ^K_V: right factor of Δ_{K∖V, V}.
  auto factor = [&](const Term& x, const LabelSet& keep, bool left) -> std::optional<Term> {
    LabelSet rest = x.ground().minus(keep);
    Vec2 v = left ? b.delta(x, keep, rest) : b.delta(x, rest, keep);
    if (!v.is_basis_element()) return std::nullopt;
    return v.begin()->first[left ? 0 : 1];
  };
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& x : enumerate_partitions(ground)) {
      auto blocks_meeting = [&](const LabelSet& u) {
        return partition_support_restrict(x, u).block_labels();
      };
      for (const auto& bt : b.species.basis(x.block_labels())) {
        for (const auto& d : enumerate_decompositions(ground, 3)) {
          const auto &r = d[0], &s = d[1], &t = d[2];
          ck.tick();
          LabelSet xrs = blocks_meeting(r.unite(s));
          LabelSet xs = blocks_meeting(s);
          LabelSet xst = blocks_meeting(s.unite(t));
          std::optional<Term> lhs, rhs;
          if (auto l = factor(bt, xrs, true)) lhs = factor(*l, xs, false);
          if (auto l = factor(bt, xst, false)) rhs = factor(*l, xs, true);
          if (!lhs || !rhs || *lhs != *rhs) {
            Json w{{"X", x.to_string()}, {"b", encode(bt)}, {"R", set_json(r)},
                   {"S", set_json(s)}, {"T", set_json(t)}};
            if (lhs) w["lhs"] = encode(*lhs);
            if (rhs) w["rhs"] = encode(*rhs);
            ck.fail(lhs && rhs ? "rho lambda != lambda rho" : "coproduct is not linearized", w);
            return ck.done();
          }
        }
      }
    }
  }
  return ck.done();
}

// --- antipode ------------------------------------------------------------------

AntipodeSolver::AntipodeSolver(Bimonoid h) : h_(std::move(h)) {
  if (!h_.species.connected())
    throw PreconditionError("antipode recursion needs a connected bimonoid, got " +
                            h_.species.name());
}

Vec AntipodeSolver::operator()(const Term& x) {
  if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  Vec out;
  const auto& ground = x.ground();
  if (ground.empty()) {
    out = Vec(x);
  } else {
    for (const auto& d : enumerate_decompositions(ground, 2)) {
      if (d[1].empty()) continue;  // S = I is the term being solved for
      for (const auto& [t, c] : h_.delta(x, d[0], d[1]))
        out.add_scaled(product(h_.mu, (*this)(t[0]), Vec(t[1])), -c);
    }
  }
  memo_.emplace(x, out);
  return out;
}

Vec AntipodeSolver::operator()(const Vec& v) {
  Vec out;
  for (const auto& [t, c] : v) out.add_scaled((*this)(t), c);
  return out;
}

Vec convolution(const LinearFn& f, const LinearFn& g, const Bimonoid& h, const Term& x) {
  Vec out;
  for (const auto& d : enumerate_decompositions(x.ground(), 2))
    for (const auto& [t, c] : h.delta(x, d[0], d[1]))
      out.add_scaled(product(h.mu, f(t[0]), g(t[1])), c);
  return out;
}

Report check_antipode(const Bimonoid& h, std::size_t n_max) {
  Checker ck("antipode", h.species.name(), n_max);
  AntipodeSolver s(h);
  LinearFn sf = [&](const Term& t) { return s(t); };
  LinearFn id = [](const Term& t) { return Vec(t); };
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& x : h.species.basis(canonical_labels(n))) {
      ck.tick();
      Vec expected = n == 0 ? Vec(x) : Vec();
      Vec left = convolution(sf, id, h, x);
      Vec right = convolution(id, sf, h, x);
      if (left != expected || right != expected) {
        ck.fail(left != expected ? "s * id != unit counit" : "id * s != unit counit",
                Json{{"x", encode(x)}, {"s(x)", encode(s(x))}, {"s*id", encode(left)},
                     {"id*s", encode(right)}});
        return ck.done();
      }
    }
  }
  return ck.done();
}

Report check_antipode_involution(const Bimonoid& h, std::size_t n_max) {
  Checker ck("antipode involution", h.species.name(), n_max);
  AntipodeSolver s(h);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& x : h.species.basis(canonical_labels(n))) {
      ck.tick();
      Vec ss = s(s(x));
      if (ss != Vec(x)) {
        ck.fail("s(s(x)) != x", Json{{"x", encode(x)}, {"s(s(x))", encode(ss)}});
        return ck.done();
      }
    }
  }
  return ck.done();
}

// --- maps ------------------------------------------------------------------------

Report check_lands_in(const SpeciesMap& f, std::size_t n_max) {
  Checker ck("lands in target", f.name, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& x : f.source.basis(ground)) {
      ck.tick();
      Vec v = f(x);
      for (const auto& [t, c] : v) {
        if (!f.target.contains(t)) {
          ck.fail("image term outside " + f.target.name(),
                  Json{{"x", encode(x)}, {"image", encode(v)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_monoid_morphism(const SpeciesMap& f, const Monoid& source, const Monoid& target,
                             std::size_t n_max) {
  Checker ck("monoid morphism", f.name, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& d : enumerate_decompositions(canonical_labels(n), 2)) {
      for (const auto& x : source.species.basis(d[0]))
        for (const auto& y : source.species.basis(d[1])) {
          ck.tick();
          Vec lhs = f(source.mu(x, y));
          Vec rhs = product(target.mu, f(x), f(y));
          if (lhs != rhs) {
            ck.fail("f mu(x,y) != mu(f x, f y)",
                    Json{{"x", encode(x)}, {"y", encode(y)}, {"lhs", encode(lhs)},
                         {"rhs", encode(rhs)}});
            return ck.done();
          }
        }
    }
  }
  return ck.done();
}

Report check_comonoid_morphism(const SpeciesMap& f, const Comonoid& source,
                               const Comonoid& target, std::size_t n_max) {
  Checker ck("comonoid morphism", f.name, n_max);
  bool positive = source.species.positive();
  LinearFn fl = [&](const Term& t) { return f(t); };
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& d : splits(ground, 2, positive)) {
      for (const auto& x : source.species.basis(ground)) {
        ck.tick();
        Vec2 lhs = map_factor(map_factor(source.delta(x, d[0], d[1]), 0, fl), 1, fl);
        Vec2 rhs = coproduct(target.delta, f(x), d[0], d[1]);
        if (lhs != rhs) {
          ck.fail("(f x f) Delta != Delta f",
                  Json{{"S", set_json(d[0])}, {"T", set_json(d[1])}, {"x", encode(x)},
                       {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

Report check_restriction_morphism(const SpeciesMap& f, const RestrictionFn& source,
                                  const RestrictionFn& target, std::size_t n_max) {
  Checker ck("restriction morphism", f.name, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    for (const auto& x : f.source.basis(ground)) {
      Vec fx = f(x);
      if (!fx.is_basis_element()) {
        ck.fail("f(x) is not a single structure", Json{{"x", encode(x)}, {"f(x)", encode(fx)}});
        return ck.done();
      }
      const Term& y = fx.begin()->first;
      for (const auto& d : enumerate_decompositions(ground, 2)) {
        if (f.source.positive() && d[0].empty()) continue;
        ck.tick();
        Vec lhs = f(source(x, d[0]));
        Vec rhs(target(y, d[0]));
        if (lhs != rhs) {
          ck.fail("f rho_U != rho_U f", Json{{"U", set_json(d[0])}, {"x", encode(x)},
                                             {"lhs", encode(lhs)}, {"rhs", encode(rhs)}});
          return ck.done();
        }
      }
    }
  }
  return ck.done();
}

namespace {
Report check_rank(const SpeciesMap& f, std::size_t n_max, bool injective) {
  Checker ck(injective ? "injective" : "surjective", f.name, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ground = canonical_labels(n);
    Echelon<Term> e;
    for (const auto& x : f.source.basis(ground)) e.insert(f(x));
    ck.tick();
    std::size_t want = injective ? f.source.basis(ground).size() : f.target.basis(ground).size();
    if (e.rank() != want) {
      ck.fail("rank " + std::to_string(e.rank()) + " != " + std::to_string(want),
              Json{{"n", n}});
      return ck.done();
    }
  }
  return ck.done();
}
}  // namespace

Report check_injective(const SpeciesMap& f, std::size_t n_max) { return check_rank(f, n_max, true); }
Report check_surjective(const SpeciesMap& f, std::size_t n_max) {
  return check_rank(f, n_max, false);
}

Report check_equal_maps(const SpeciesMap& f, const SpeciesMap& g, std::size_t n_max) {
  Checker ck("equal maps", f.name + " = " + g.name, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& x : f.source.basis(canonical_labels(n))) {
      ck.tick();
      Vec a = f(x), b = g(x);
      if (a != b) {
        ck.fail("maps differ", Json{{"x", encode(x)}, {"lhs", encode(a)}, {"rhs", encode(b)}});
        return ck.done();
      }
    }
  }
  return ck.done();
}

void certify(Bimonoid& h, std::size_t n_max) {
  auto& c = h.certs;
  c.record(Property::Connected, {h.species.connected(), 0, ""});
  c.record(Property::Associative, check_associativity(h.monoid(), n_max).certificate());
  c.record(Property::Coassociative, check_coassociativity(h.comonoid(), n_max).certificate());
  c.record(Property::Compatible, check_compatibility(h, n_max).certificate());
  c.record(Property::Commutative, check_commutativity(h.monoid(), n_max).certificate());
  c.record(Property::Cocommutative, check_cocommutativity(h.comonoid(), n_max).certificate());
  c.record(Property::LinearizedProduct,
           check_linearized_product(h.monoid(), n_max).certificate());
  c.record(Property::LinearizedCoproduct,
           check_linearized_coproduct(h.comonoid(), n_max).certificate());
  if (h.restriction) {
    c.record(Property::RestrictionAxioms,
             check_restriction_axioms(h.species, *h.restriction, n_max).certificate());
    c.record(Property::Coherent,
             check_coherence(h.monoid(), *h.restriction, n_max).certificate());
    c.record(Property::CoproductFromRestrictions,
             check_coproduct_from_restrictions(h.comonoid(), n_max).certificate());
  }
}

void certify(Comonoid& co, std::size_t n_max) {
  auto& c = co.certs;
  c.record(Property::Coassociative, check_coassociativity(co, n_max).certificate());
  c.record(Property::Cocommutative, check_cocommutativity(co, n_max).certificate());
  c.record(Property::LinearizedCoproduct, check_linearized_coproduct(co, n_max).certificate());
  if (co.restriction) {
    c.record(Property::RestrictionAxioms,
             check_restriction_axioms(co.species, *co.restriction, n_max).certificate());
    c.record(Property::CoproductFromRestrictions,
             check_coproduct_from_restrictions(co, n_max).certificate());
  }
}

}  // namespace species
