#include "hyperhorn/horn.hpp"

#include <algorithm>

namespace hyperhorn {

namespace {

std::vector<Expr> as_args(const Vocabulary& v) {
  std::vector<Expr> out;
  for (const auto& x : v) out.push_back(var_expr(x));
  return out;
}

Expr close(const Expr& f) {
  Vocabulary fv = free_vars(f);
  if (fv.empty()) return f;
  return forall_(fv.vars(), f);
}

Expr close_over(const Vocabulary& vars, const Expr& f) {
  if (vars.empty()) return f;
  return forall_(vars.vars(), f);
}

Expr iff(const Expr& a, const Expr& b) { return eq(a, b); }

// Strip hoistable existentials reachable through conjunctions.
Expr hoist_marked(const Expr& f, Vocabulary& universals) {
  if (f.op() == Op::And) {
    std::vector<Expr> parts;
    for (const auto& a : f.args()) parts.push_back(hoist_marked(a, universals));
    return and_(parts);
  }
  if (f.op() == Op::Exists && f.hoistable()) {
    std::vector<Var> taken = universals.vars();
    for (const auto& v : free_vars(f)) taken.push_back(v);
    Substitution m;
    for (const auto& b : f.bound()) {
      Var r = b;
      if (std::find(taken.begin(), taken.end(), b) != taken.end())
        r = Var(fresh_name(b.name, taken), b.sort, b.copy, b.primed);
      taken.push_back(r);
      universals.add(r);
      if (!(r == b)) m[b] = var_expr(r);
    }
    return hoist_marked(m.empty() ? f.body() : substitute(f.body(), m), universals);
  }
  return f;
}

}  // namespace

std::string role_name(ClauseRole r) {
  switch (r) {
    case ClauseRole::Query:
      return "query";
    case ClauseRole::Bad:
      return "bad";
    case ClauseRole::Invalid:
      return "invalid";
    case ClauseRole::Step:
      return "step";
  }
  return "?";
}

Expr HornClause::to_formula() const {
  std::vector<Expr> parts;
  for (const auto& b : body) parts.push_back(b.to_expr());
  parts.push_back(constraint);
  Expr lhs = parts.size() == 1 ? parts[0] : and_(parts);
  Expr rhs = head ? head->to_expr() : false_expr();
  return close_over(universals, implies(lhs, rhs));
}

Signature HornSystem::signature() const {
  Signature sig;
  for (const auto& d : unknowns) sig[d.name] = d.params.sorts();
  return sig;
}

const PredicateDecl& HornSystem::decl(const std::string& name) const {
  for (const auto& d : unknowns)
    if (d.name == name) return d;
  throw Error("undeclared predicate " + name);
}

std::string doomed_name(const ChoiceTag& c) { return "D_" + c.canonical(); }

HornSystem transform(const SchemeSystem& scheme) {
  if (scheme.choices.empty()) throw Error("transform: scheme has no choices");
  HornSystem h;
  h.scheme_derived = true;
  h.choice_count = scheme.choices.size();
  h.v_vocab = scheme.v_vocab;
  h.w_vocab = scheme.w_vocab;
  Vocabulary vw = concat(scheme.v_vocab, scheme.w_vocab);
  Vocabulary v_next = scheme.v_vocab.primed();
  Vocabulary w_next = scheme.w_vocab.primed();
  Vocabulary vw_next = concat(v_next, w_next);
  for (const auto& c : scheme.choices) h.unknowns.push_back({doomed_name(c), vw});

  auto at = [&](size_t u, const Vocabulary& args) {
    return PredicateApp{h.unknowns[u].name, as_args(args)};
  };

  HornClause query;
  query.universals = vw;
  for (size_t u = 0; u < scheme.choices.size(); ++u) query.body.push_back(at(u, vw));
  query.constraint = scheme.alpha;
  h.clauses.push_back(query);
  h.provenance.push_back({ClauseRole::Query, std::nullopt});

  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    HornClause c;
    c.universals = vw;
    c.constraint = scheme.beta;
    c.head = at(u, vw);
    h.clauses.push_back(c);
    h.provenance.push_back({ClauseRole::Bad, u});
  }
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    HornClause c;
    c.universals = vw;
    c.constraint = scheme.gamma[u];
    c.head = at(u, vw);
    h.clauses.push_back(c);
    h.provenance.push_back({ClauseRole::Invalid, u});
  }
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    HornClause c;
    c.universals = concat(vw, vw_next);
    for (const auto& w : w_next)
      if (occurs_free(w, scheme.delta[u]))
        throw Error("transform: delta mentions reserved variable " + w.spelling());
    for (size_t v = 0; v < scheme.choices.size(); ++v) c.body.push_back(at(v, vw_next));
    c.constraint = hoist_marked(scheme.delta[u], c.universals);
    c.head = at(u, vw);
    h.clauses.push_back(c);
    h.provenance.push_back({ClauseRole::Step, u});
  }
  return h;
}

Expr instantiate(const Expr& f, const Solution& sol) {
  if (f.op() == Op::Apply) {
    auto it = sol.find(f.predicate());
    if (it == sol.end()) throw Error("no definition for predicate " + f.predicate());
    const Definition& d = it->second;
    if (d.params.size() != f.args().size())
      throw Error("definition of " + f.predicate() + " has the wrong arity");
    Substitution m;
    for (size_t i = 0; i < d.params.size(); ++i) m[d.params[i]] = instantiate(f.arg(i), sol);
    return substitute(d.body, m);
  }
  if (f.args().empty()) return f;
  if (f.is_quantifier()) {
    Expr body = instantiate(f.body(), sol);
    return f.op() == Op::Forall ? forall_(f.bound(), body) : exists_(f.bound(), body, f.hoistable());
  }
  std::vector<Expr> args;
  for (const auto& a : f.args()) args.push_back(instantiate(a, sol));
  return with_args(f, args);
}

Solution solution_fol_to_chc(const Solution& fol, const SchemeSystem& scheme) {
  Vocabulary vw = concat(scheme.v_vocab, scheme.w_vocab);
  Solution out;
  Expr inv = apply_pred(scheme.inv_name(), as_args(scheme.v_vocab));
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    Expr a = apply_pred(scheme.arbiter_name(u), as_args(vw));
    out[doomed_name(scheme.choices[u])] = Definition{vw, negate(instantiate(and_({inv, a}), fol))};
  }
  return out;
}

Solution solution_chc_to_fol(const Solution& chc, const SchemeSystem& scheme) {
  Vocabulary vw = concat(scheme.v_vocab, scheme.w_vocab);
  Solution out;
  std::vector<Expr> not_doomed;
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    Expr d = instantiate(apply_pred(doomed_name(scheme.choices[u]), as_args(vw)), chc);
    not_doomed.push_back(negate(d));
    out[scheme.arbiter_name(u)] = Definition{vw, negate(d)};
  }
  Expr some = not_doomed.size() == 1 ? not_doomed[0] : or_(not_doomed);
  if (!scheme.w_vocab.empty()) some = forall_(scheme.w_vocab.vars(), some);
  out[scheme.inv_name()] = Definition{scheme.v_vocab, some};
  return out;
}

std::vector<ValidityQuery> emit_translation_certificates(const SchemeSystem& scheme,
                                                         const HornSystem& horn) {
  if (scheme.choices.empty()) throw Error("certificates: scheme has no choices");
  Vocabulary v = scheme.v_vocab;
  Vocabulary vw = concat(v, scheme.w_vocab);
  Vocabulary vv = concat(vw, v.primed());

  // same shape, constraints replaced by uninterpreted stand-ins
  SchemeSystem abs = scheme;
  Signature sig = scheme_signature(scheme);
  abs.alpha = apply_pred("alpha", as_args(v));
  abs.beta = apply_pred("beta", as_args(v));
  sig["alpha"] = v.sorts();
  sig["beta"] = v.sorts();
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    std::string g = "gamma_" + scheme.choices[u].canonical();
    std::string d = "delta_" + scheme.choices[u].canonical();
    abs.gamma[u] = apply_pred(g, as_args(vw));
    std::vector<Expr> dargs = as_args(v);
    for (const auto& x : v.primed()) dargs.push_back(var_expr(x));
    for (const auto& x : scheme.w_vocab) dargs.push_back(var_expr(x));
    abs.delta[u] = apply_pred(d, dargs);
    sig[g] = vw.sorts();
    sig[d] = concat(concat(v, v.primed()), scheme.w_vocab).sorts();
  }
  HornSystem abs_horn = transform(abs);
  if (abs_horn.clauses.size() != horn.clauses.size())
    throw Error("certificates: horn system does not come from this scheme");
  for (const auto& d : abs_horn.unknowns) sig[d.name] = d.params.sorts();

  std::vector<Expr> scheme_axioms;
  for (const auto& f : scheme_formulas(abs)) scheme_axioms.push_back(close(f.formula));
  std::vector<Expr> horn_axioms;
  for (const auto& c : abs_horn.clauses) horn_axioms.push_back(c.to_formula());

  Expr inv = apply_pred(abs.inv_name(), as_args(v));
  std::vector<Expr> d_def, a_def, not_d;
  for (size_t u = 0; u < scheme.choices.size(); ++u) {
    Expr d = apply_pred(doomed_name(scheme.choices[u]), as_args(vw));
    Expr a = apply_pred(abs.arbiter_name(u), as_args(vw));
    d_def.push_back(close_over(vw, iff(d, not_(and_({inv, a})))));
    a_def.push_back(close_over(vw, iff(a, not_(d))));
    not_d.push_back(not_(d));
  }
  Expr some = not_d.size() == 1 ? not_d[0] : or_(not_d);
  if (!scheme.w_vocab.empty()) some = forall_(scheme.w_vocab.vars(), some);
  Expr inv_def = close_over(v, iff(inv, some));

  std::vector<ValidityQuery> out;
  std::vector<Expr> hyp1 = scheme_axioms;
  hyp1.insert(hyp1.end(), d_def.begin(), d_def.end());
  Expr h1 = and_(hyp1);
  for (size_t i = 0; i < abs_horn.clauses.size(); ++i) {
    const auto& p = abs_horn.provenance[i];
    std::string name = "fol-to-chc " + role_name(p.role);
    if (p.choice) name += " " + scheme.choices[*p.choice].canonical();
    out.push_back({name, implies(h1, horn_axioms[i]), sig});
  }
  std::vector<Expr> hyp2 = horn_axioms;
  hyp2.push_back(inv_def);
  hyp2.insert(hyp2.end(), a_def.begin(), a_def.end());
  Expr h2 = and_(hyp2);
  auto formulas = scheme_formulas(abs);
  for (size_t i = 0; i < formulas.size(); ++i)
    out.push_back({"chc-to-fol " + formulas[i].role, implies(h2, scheme_axioms[i]), sig});
  return out;
}

std::vector<std::string> lint_horn(const HornSystem& horn) {
  std::vector<std::string> d;
  Signature sig = horn.signature();
  if (sig.size() != horn.unknowns.size()) d.push_back("duplicate predicate declarations");
  if (horn.provenance.size() != horn.clauses.size()) d.push_back("provenance does not cover every clause");
  if (horn.scheme_derived && horn.clauses.size() != 1 + 3 * horn.choice_count)
    d.push_back("expected " + std::to_string(1 + 3 * horn.choice_count) + " clauses, found " +
                std::to_string(horn.clauses.size()));
  for (size_t i = 0; i < horn.clauses.size(); ++i) {
    const auto& c = horn.clauses[i];
    std::string at = "clause " + std::to_string(i + 1) + ": ";
    auto check_app = [&](const PredicateApp& p) {
      auto it = sig.find(p.name);
      if (it == sig.end()) {
        d.push_back(at + "undeclared predicate " + p.name);
        return;
      }
      if (it->second.size() != p.args.size()) {
        d.push_back(at + "arity mismatch for " + p.name);
        return;
      }
      for (size_t j = 0; j < p.args.size(); ++j) {
        if (!(p.args[j].sort() == it->second[j])) d.push_back(at + "sort mismatch for " + p.name);
        if (contains_apply(p.args[j])) d.push_back(at + "nested unknown in arguments of " + p.name);
        for (const auto& v : free_vars(p.args[j]))
          if (!c.universals.contains(v)) d.push_back(at + "unbound variable " + v.spelling());
      }
    };
    for (const auto& b : c.body) check_app(b);
    if (c.head) check_app(*c.head);
    if (contains_apply(c.constraint))
      d.push_back(at + "constraint contains an unknown predicate (Horn property)");
    if (!c.constraint.sort().is_bool()) d.push_back(at + "constraint is not Bool");
    for (const auto& v : free_vars(c.constraint))
      if (!c.universals.contains(v)) d.push_back(at + "unbound variable " + v.spelling());
  }
  return d;
}

}  // namespace hyperhorn
