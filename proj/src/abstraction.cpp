#include "hyperhorn/abstraction.hpp"

#include "hyperhorn/formula_io.hpp"

namespace hyperhorn {

PredicateSet make_predicate_set(std::vector<Expr> preds, const Vocabulary& v,
                                const Vocabulary& w) {
  if (preds.empty()) throw Error("predicate set is empty");
  for (const auto& p : preds) {
    if (!p.sort().is_bool()) throw SortError("predicate is not Bool: " + print_formula(p));
    if (contains_apply(p)) throw Error("predicate mentions an unknown: " + print_formula(p));
    for (const auto& x : free_vars(p)) {
      std::optional<Var> known = v.find(x);
      if (!known) known = w.find(x);
      if (!known) throw Error("predicate mentions " + x.spelling() + ", which is not a state or universal label variable");
      if (known->sort != x.sort)
        throw SortError("predicate uses " + x.spelling() + " at sort " + x.sort.to_string() +
                        ", declared " + known->sort.to_string());
    }
  }
  return PredicateSet{std::move(preds)};
}

namespace {

Expr eq_frames(const std::vector<Expr>& preds, const Substitution& left, const Substitution& right) {
  std::vector<Expr> parts;
  for (const auto& p : preds) {
    Expr a = left.empty() ? p : substitute(p, left);
    Expr b = substitute(p, right);
    if (a == b) continue;
    parts.push_back(eq(a, b));
  }
  return conj(parts);
}

}  // namespace

HornSystem abstract_horn(const HornSystem& horn, const PredicateSet& preds) {
  if (!horn.scheme_derived) throw Error("abstraction needs a scheme-derived Horn system");
  make_predicate_set(preds.preds, horn.v_vocab, horn.w_vocab);
  HornSystem out = horn;
  for (size_t i = 0; i < out.clauses.size(); ++i) {
    if (out.provenance[i].role != ClauseRole::Step) continue;
    HornClause& c = out.clauses[i];
    std::vector<Var> taken = c.universals.vars();
    for (const auto& x : free_vars(c.constraint)) taken.push_back(x);
    Substitution to_hat, to_hat_next, to_next;
    for (const auto& x : horn.v_vocab) {
      std::string base = x.name + "_hat";
      // both the hatted variable and its primed twin must be new
      std::string name = base;
      for (int n = 1;; ++n) {
        bool clash = false;
        for (const auto& t : taken)
          clash = clash || (t.name == name && t.copy == x.copy);
        if (!clash) break;
        name = base + "!" + std::to_string(n);
      }
      Var hat(name, x.sort, x.copy, false);
      taken.push_back(hat);
      taken.push_back(hat.prime());
      c.universals.add(hat);
      c.universals.add(hat.prime());
      to_hat[x] = var_expr(hat);
      to_hat_next[x] = var_expr(hat.prime());
      to_next[x] = var_expr(x.prime());
    }
    Substitution frame;
    for (const auto& [x, h] : to_hat) frame[x] = h;
    for (const auto& [x, h] : to_hat_next) frame[x.prime()] = h;
    c.constraint = conj({eq_frames(preds.preds, {}, to_hat), substitute(c.constraint, frame),
                         eq_frames(preds.preds, to_hat_next, to_next)});
  }
  return out;
}

std::vector<ValidityQuery> abstraction_monotonicity_queries(const HornSystem& concrete,
                                                            const HornSystem& abstracted) {
  if (concrete.clauses.size() != abstracted.clauses.size())
    throw Error("abstracted system does not match the concrete one");
  // hatted copy of x is x_hat or x_hat!n, same copy and prime
  auto origin = [&](const Var& h) -> std::optional<Var> {
    for (const auto& x : concrete.v_vocab) {
      if (x.copy != h.copy) continue;
      std::string base = x.name + "_hat";
      if (h.name == base) return h.primed ? x.prime() : x;
      if (h.name.size() > base.size() + 1 && h.name.compare(0, base.size() + 1, base + "!") == 0 &&
          h.name.find_first_not_of("0123456789", base.size() + 1) == std::string::npos)
        return h.primed ? x.prime() : x;
    }
    return std::nullopt;
  };
  std::vector<ValidityQuery> out;
  for (size_t i = 0; i < concrete.clauses.size(); ++i) {
    if (concrete.provenance[i].role != ClauseRole::Step) continue;
    const auto& c = concrete.clauses[i];
    const auto& a = abstracted.clauses[i];
    // V^ := V, V^' := V' witnesses the hatted existential
    Substitution witness;
    for (const auto& x : a.universals) {
      if (c.universals.contains(x)) continue;
      auto o = origin(x);
      if (!o) throw Error("abstracted clause has unexpected variable " + x.spelling());
      witness[x] = var_expr(*o);
    }
    std::string name = "abstraction step";
    if (auto u = concrete.provenance[i].choice) name += " " + std::to_string(*u);
    out.push_back({name, implies(c.constraint, substitute(a.constraint, witness)), {}});
  }
  return out;
}

}  // namespace hyperhorn
