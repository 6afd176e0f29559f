#include "hyperhorn/simplify.hpp"

#include <algorithm>
#include <optional>

namespace hyperhorn {

namespace {

std::optional<int64_t> fold_arith(Op op, const std::vector<Expr>& args) {
  for (const auto& a : args)
    if (a.op() != Op::IntLit) return std::nullopt;
  int64_t acc = args[0].int_value();
  for (size_t i = 1; i < args.size(); ++i) {
    int64_t v = args[i].int_value();
    bool overflow = false;
    if (op == Op::Add) overflow = __builtin_add_overflow(acc, v, &acc);
    if (op == Op::Sub) overflow = __builtin_sub_overflow(acc, v, &acc);
    if (op == Op::Mul) overflow = __builtin_mul_overflow(acc, v, &acc);
    if (overflow) return std::nullopt;
  }
  return acc;
}

}  // namespace

Expr simplify(const Expr& f) {
  switch (f.op()) {
    case Op::IntLit:
    case Op::BoolLit:
    case Op::Variable:
      return f;
    case Op::Forall:
    case Op::Exists: {
      Expr body = simplify(f.body());
      if (body.op() == Op::BoolLit) return body;
      Vocabulary fv = free_vars(body);
      std::vector<Var> used;
      for (const auto& v : f.bound())
        if (fv.contains(v)) used.push_back(v);
      if (used.empty()) return body;
      return f.op() == Op::Forall ? forall_(used, body) : exists_(used, body, f.hoistable());
    }
    default:
      break;
  }
  std::vector<Expr> args;
  for (const auto& a : f.args()) args.push_back(simplify(a));
  switch (f.op()) {
    case Op::Not:
      return negate(args[0]);
    case Op::And:
      return conj(args);
    case Op::Or:
      return disj(args);
    case Op::Implies:
      if (args[0].is_true()) return args[1];
      if (args[0].is_false() || args[1].is_true()) return true_expr();
      if (args[1].is_false()) return negate(args[0]);
      return implies(args[0], args[1]);
    case Op::Eq:
      if (args[0] == args[1]) return true_expr();
      if (args[0].op() == Op::IntLit && args[1].op() == Op::IntLit)
        return bool_lit(args[0].int_value() == args[1].int_value());
      if (args[0].op() == Op::BoolLit && args[1].op() == Op::BoolLit)
        return bool_lit(args[0].bool_value() == args[1].bool_value());
      if (args[0].op() == Op::BoolLit) return args[0].bool_value() ? args[1] : negate(args[1]);
      if (args[1].op() == Op::BoolLit) return args[1].bool_value() ? args[0] : negate(args[0]);
      return eq(args[0], args[1]);
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge:
      if (args[0].op() == Op::IntLit && args[1].op() == Op::IntLit) {
        int64_t a = args[0].int_value(), b = args[1].int_value();
        bool r = f.op() == Op::Lt ? a < b : f.op() == Op::Le ? a <= b : f.op() == Op::Gt ? a > b : a >= b;
        return bool_lit(r);
      }
      return with_args(f, args);
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
      if (auto v = fold_arith(f.op(), args)) return int_lit(*v);
      return with_args(f, args);
    case Op::Neg:
      if (args[0].op() == Op::IntLit && args[0].int_value() != INT64_MIN)
        return int_lit(-args[0].int_value());
      return neg(args[0]);
    case Op::Ite:
      if (args[0].is_true()) return args[1];
      if (args[0].is_false()) return args[2];
      if (args[1] == args[2]) return args[1];
      return ite(args[0], args[1], args[2]);
    default:
      return with_args(f, args);
  }
}

// ---- existential elimination

namespace {

std::vector<Expr> conjuncts(const Expr& e) {
  if (e.op() == Op::And) {
    std::vector<Expr> out;
    for (const auto& a : e.args())
      for (const auto& b : conjuncts(a)) out.push_back(b);
    return out;
  }
  if (e.is_true()) return {};
  return {e};
}

bool mentions(const Expr& e, const Var& x) { return occurs_free(x, e); }

bool is_var(const Expr& e, const Var& x) { return e.op() == Op::Variable && e.var() == x; }

// Solve side = other for x when x is a unit summand of side.
std::optional<Expr> isolate_side(const Var& x, const Expr& side, const Expr& other) {
  if (mentions(other, x)) return std::nullopt;
  if (is_var(side, x)) return other;
  if (!side.sort().is_int()) return std::nullopt;
  if (side.op() == Op::Add) {
    int hits = 0;
    size_t at = 0;
    for (size_t i = 0; i < side.args().size(); ++i) {
      if (is_var(side.arg(i), x)) {
        ++hits;
        at = i;
      } else if (mentions(side.arg(i), x)) {
        return std::nullopt;
      }
    }
    if (hits != 1) return std::nullopt;
    std::vector<Expr> parts{other};
    for (size_t i = 0; i < side.args().size(); ++i)
      if (i != at) parts.push_back(side.arg(i));
    return sub(parts);
  }
  if (side.op() == Op::Sub) {
    const auto& a = side.args();
    int hits = 0;
    size_t at = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (!mentions(a[i], x)) continue;
      if (!is_var(a[i], x)) return std::nullopt;
      ++hits;
      at = i;
    }
    if (hits != 1) return std::nullopt;
    if (at == 0) {
      std::vector<Expr> parts{other};
      for (size_t i = 1; i < a.size(); ++i) parts.push_back(a[i]);
      return add(parts);
    }
    std::vector<Expr> parts{a[0]};
    for (size_t i = 1; i < a.size(); ++i)
      if (i != at) parts.push_back(a[i]);
    parts.push_back(other);
    return sub(parts);
  }
  if (side.op() == Op::Neg && is_var(side.arg(0), x)) return neg(other);
  return std::nullopt;
}

// If conjunct c pins x to a term free of x, return that term.
std::optional<Expr> definition_of(const Var& x, const Expr& c) {
  if (c.op() == Op::Eq) {
    if (auto t = isolate_side(x, c.arg(0), c.arg(1))) return t;
    if (auto t = isolate_side(x, c.arg(1), c.arg(0))) return t;
    return std::nullopt;
  }
  if (x.sort.is_bool()) {
    if (is_var(c, x)) return true_expr();
    if (c.op() == Op::Not && is_var(c.arg(0), x)) return false_expr();
  }
  return std::nullopt;
}

// x occurs only as a unit summand in a single inequality/disequality.
bool unbounded_single_use(const Var& x, const Expr& c) {
  if (!x.sort.is_int()) return false;
  Expr atom = c;
  bool negated = false;
  if (atom.op() == Op::Not) {
    atom = atom.arg(0);
    negated = true;
  }
  bool ineq = atom.op() == Op::Lt || atom.op() == Op::Le || atom.op() == Op::Gt || atom.op() == Op::Ge;
  bool diseq = negated && atom.op() == Op::Eq && atom.arg(0).sort().is_int();
  if (!ineq && !diseq) return false;
  return isolate_side(x, atom.arg(0), atom.arg(1)).has_value() ||
         isolate_side(x, atom.arg(1), atom.arg(0)).has_value();
}

struct Eliminator {
  const EliminationOptions& opts;
  int budget;

  Expr run(std::vector<Var> vars, Expr body) {
    body = simplify(body);
    Vocabulary fv = free_vars(body);
    std::erase_if(vars, [&](const Var& v) { return !fv.contains(v); });
    if (vars.empty()) return body;
    if (body.op() == Op::Or) {
      std::vector<Expr> parts;
      for (const auto& d : body.args()) parts.push_back(run(vars, d));
      return disj(parts);
    }
    std::vector<Expr> cs = conjuncts(body);

    // one-point
    for (bool progress = true; progress;) {
      progress = false;
      for (size_t vi = 0; vi < vars.size() && !progress; ++vi) {
        for (size_t ci = 0; ci < cs.size() && !progress; ++ci) {
          auto t = definition_of(vars[vi], cs[ci]);
          if (!t) continue;
          Substitution m{{vars[vi], *t}};
          std::vector<Expr> rest;
          for (size_t j = 0; j < cs.size(); ++j)
            if (j != ci) rest.push_back(substitute(cs[j], m));
          vars.erase(vars.begin() + static_cast<long>(vi));
          return run(vars, conj(rest));
        }
      }
    }

    // distribute over a disjunctive conjunct that mentions a bound variable;
    // a Bool ite counts as (c and t) or (not c and e)
    for (size_t ci = 0; ci < cs.size(); ++ci) {
      std::vector<Expr> alts;
      if (cs[ci].op() == Op::Or) {
        alts = cs[ci].args();
      } else if (cs[ci].op() == Op::Ite && cs[ci].sort().is_bool()) {
        const Expr& c = cs[ci].arg(0);
        alts = {and_({c, cs[ci].arg(1)}), and_({negate(c), cs[ci].arg(2)})};
      } else {
        continue;
      }
      bool relevant = std::any_of(vars.begin(), vars.end(),
                                  [&](const Var& v) { return mentions(cs[ci], v); });
      int n = static_cast<int>(alts.size());
      if (!relevant || budget < n) continue;
      budget -= n;
      std::vector<Expr> parts;
      for (const auto& d : alts) {
        std::vector<Expr> branch;
        for (size_t j = 0; j < cs.size(); ++j) branch.push_back(j == ci ? d : cs[j]);
        parts.push_back(run(vars, conj(branch)));
      }
      return disj(parts);
    }

    // finite domains
    for (size_t vi = 0; vi < vars.size(); ++vi) {
      auto it = opts.finite_domains.find(vars[vi]);
      if (it == opts.finite_domains.end()) continue;
      int n = static_cast<int>(it->second.size());
      if (budget < n) continue;
      budget -= n;
      std::vector<Var> rest = vars;
      rest.erase(rest.begin() + static_cast<long>(vi));
      std::vector<Expr> parts;
      Expr b = conj(cs);
      for (const auto& c : it->second) parts.push_back(run(rest, substitute(b, {{vars[vi], c}})));
      return disj(parts);
    }

    // an unbounded integer used by a single inequality can always satisfy it
    for (size_t vi = 0; vi < vars.size(); ++vi) {
      size_t uses = 0, at = 0;
      for (size_t ci = 0; ci < cs.size(); ++ci)
        if (mentions(cs[ci], vars[vi])) {
          ++uses;
          at = ci;
        }
      if (uses == 1 && unbounded_single_use(vars[vi], cs[at])) {
        cs.erase(cs.begin() + static_cast<long>(at));
        vars.erase(vars.begin() + static_cast<long>(vi));
        return run(vars, conj(cs));
      }
    }

    // miniscope: conjuncts free of bound variables move outside
    std::vector<Expr> inside, outside;
    for (const auto& c : cs) {
      bool dep = std::any_of(vars.begin(), vars.end(), [&](const Var& v) { return mentions(c, v); });
      (dep ? inside : outside).push_back(c);
    }
    outside.push_back(exists_(vars, conj(inside)));
    return conj(outside);
  }
};

}  // namespace

Expr eliminate_exists(const std::vector<Var>& vars, const Expr& body,
                      const EliminationOptions& opts) {
  Eliminator e{opts, opts.max_disjuncts};
  return e.run(vars, body);
}

// ---- polarity normalization for emission

namespace {

Expr polar(const Expr& e, bool pos) {
  if (!contains_quantifier(e)) return pos ? e : negate(e);
  switch (e.op()) {
    case Op::Not:
      return polar(e.arg(0), !pos);
    case Op::And:
    case Op::Or: {
      std::vector<Expr> parts;
      for (const auto& a : e.args()) parts.push_back(polar(a, pos));
      bool as_and = (e.op() == Op::And) == pos;
      return as_and ? conj(parts) : disj(parts);
    }
    case Op::Implies:
      if (pos) return disj({polar(e.arg(0), false), polar(e.arg(1), true)});
      return conj({polar(e.arg(0), true), polar(e.arg(1), false)});
    case Op::Eq: {
      if (!e.arg(0).sort().is_bool()) break;
      const Expr& a = e.arg(0);
      const Expr& b = e.arg(1);
      if (pos)
        return disj({conj({polar(a, true), polar(b, true)}), conj({polar(a, false), polar(b, false)})});
      return disj({conj({polar(a, true), polar(b, false)}), conj({polar(a, false), polar(b, true)})});
    }
    case Op::Ite: {
      if (!e.sort().is_bool()) break;
      const Expr& c = e.arg(0);
      Expr t = e.arg(1), f = e.arg(2);
      return disj({conj({polar(c, true), polar(t, pos)}), conj({polar(c, false), polar(f, pos)})});
    }
    case Op::Forall:
      if (pos) return forall_(e.bound(), polar(e.body(), true));
      return exists_(e.bound(), polar(e.body(), false));
    case Op::Exists:
      if (pos) return exists_(e.bound(), polar(e.body(), true), e.hoistable());
      return forall_(e.bound(), polar(e.body(), false));
    default:
      break;
  }
  throw Error("quantifier inside a term is not supported: " + std::to_string(static_cast<int>(e.op())));
}

Expr hoist(const Expr& e, std::vector<Var>& taken, std::vector<Var>& out) {
  if (e.op() == Op::And || e.op() == Op::Or) {
    std::vector<Expr> parts;
    for (const auto& a : e.args()) parts.push_back(hoist(a, taken, out));
    return e.op() == Op::And ? conj(parts) : disj(parts);
  }
  if (e.op() == Op::Exists) {
    Substitution m;
    for (const auto& b : e.bound()) {
      Var r = b;
      if (std::find(taken.begin(), taken.end(), b) != taken.end())
        r = Var(fresh_name(b.name, taken), b.sort, b.copy, b.primed);
      taken.push_back(r);
      out.push_back(r);
      if (!(r == b)) m[b] = var_expr(r);
    }
    return hoist(m.empty() ? e.body() : substitute(e.body(), m), taken, out);
  }
  return e;
}

}  // namespace

Expr push_negations(const Expr& f) { return polar(f, true); }

Hoisted hoist_existentials(const Expr& f, std::vector<Var> taken) {
  for (const auto& v : free_vars(f)) taken.push_back(v);
  Hoisted h;
  h.body = hoist(f, taken, h.vars);
  return h;
}

}  // namespace hyperhorn
