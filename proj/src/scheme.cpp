#include "hyperhorn/scheme.hpp"

#include <sstream>

#include "hyperhorn/formula_io.hpp"

namespace hyperhorn {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::KSafety:
      return "ksafety";
    case Mode::GameFinite:
      return "forall-exists-finite";
    case Mode::GameRestricted:
      return "forall-exists-restricted";
  }
  return "?";
}

namespace {

std::string literal_tag(const Expr& c) {
  if (c.op() == Op::IntLit)
    return c.int_value() < 0 ? "n" + std::to_string(0ULL - static_cast<uint64_t>(c.int_value()))
                             : std::to_string(c.int_value());
  if (c.op() == Op::BoolLit) return c.bool_value() ? "t" : "f";
  throw Error("label constants must be literals, got " + print_formula(c));
}

}  // namespace

std::string ChoiceTag::canonical() const {
  std::string s = schedule.tag();
  if (const auto* labels = std::get_if<std::vector<Expr>>(&witness)) {
    s += "_l";
    for (size_t i = 0; i < labels->size(); ++i) s += (i ? "_" : "") + literal_tag((*labels)[i]);
  } else if (const auto* r = std::get_if<RestrictionChoice>(&witness)) {
    s += "_r" + std::to_string(r->index);
  }
  return s;
}

std::string ChoiceTag::display() const {
  std::string s = schedule.to_string();
  if (const auto* labels = std::get_if<std::vector<Expr>>(&witness)) {
    s += ",<";
    for (size_t i = 0; i < labels->size(); ++i) s += (i ? "," : "") + print_formula((*labels)[i]);
    s += ">";
  } else if (const auto* r = std::get_if<RestrictionChoice>(&witness)) {
    s += ",p" + std::to_string(r->index) + "=" + print_formula(r->restriction.predicate);
  }
  return s;
}

void SchemeSystem::check() const {
  if (choices.empty()) throw Error("scheme has no choices");
  if (gamma.size() != choices.size() || delta.size() != choices.size())
    throw Error("scheme: gamma/delta not indexed by choices");
  size_t kind = choices[0].witness.index();
  for (const auto& c : choices)
    if (c.witness.index() != kind) throw Error("scheme: mixed choice tag kinds");
  Vocabulary vw = concat(v_vocab, w_vocab);
  Vocabulary vwv = concat(vw, v_vocab.primed());
  auto within = [](const Expr& f, const Vocabulary& vocab, const std::string& what) {
    if (contains_apply(f)) throw Error("scheme: " + what + " contains an unknown predicate");
    if (!f.sort().is_bool()) throw Error("scheme: " + what + " is not Bool");
    for (const auto& v : free_vars(f))
      if (!vocab.contains(v)) throw Error("scheme: " + what + " mentions " + v.spelling());
  };
  within(alpha, v_vocab, "alpha");
  within(beta, v_vocab, "beta");
  for (size_t u = 0; u < choices.size(); ++u) {
    within(gamma[u], vw, "gamma " + choices[u].canonical());
    within(delta[u], vwv, "delta " + choices[u].canonical());
  }
}

std::vector<SchemeFormula> scheme_formulas(const SchemeSystem& s) {
  auto args = [](const Vocabulary& v) {
    std::vector<Expr> out;
    for (const auto& x : v) out.push_back(var_expr(x));
    return out;
  };
  Vocabulary vw = concat(s.v_vocab, s.w_vocab);
  Expr inv = apply_pred(s.inv_name(), args(s.v_vocab));
  Expr inv_next = apply_pred(s.inv_name(), args(s.v_vocab.primed()));
  std::vector<SchemeFormula> out;
  out.push_back({"initiation", implies(s.alpha, inv)});
  out.push_back({"safety", implies(and_({inv, s.beta}), false_expr())});
  for (size_t u = 0; u < s.choices.size(); ++u) {
    Expr a = apply_pred(s.arbiter_name(u), args(vw));
    out.push_back({"validity " + s.choices[u].canonical(),
                   implies(and_({inv, a, s.gamma[u]}), false_expr())});
  }
  for (size_t u = 0; u < s.choices.size(); ++u) {
    Expr a = apply_pred(s.arbiter_name(u), args(vw));
    out.push_back({"consecution " + s.choices[u].canonical(),
                   implies(and_({inv, a, s.delta[u]}), inv_next)});
  }
  std::vector<Expr> cover;
  for (size_t u = 0; u < s.choices.size(); ++u) cover.push_back(apply_pred(s.arbiter_name(u), args(vw)));
  out.push_back({"cover", implies(inv, cover.size() == 1 ? cover[0] : or_(cover))});
  return out;
}

Signature scheme_signature(const SchemeSystem& s) {
  Signature sig;
  sig[s.inv_name()] = s.v_vocab.sorts();
  auto vw = concat(s.v_vocab, s.w_vocab).sorts();
  for (size_t u = 0; u < s.choices.size(); ++u) sig[s.arbiter_name(u)] = vw;
  return sig;
}

std::string SchemeSystem::dump() const {
  std::ostringstream os;
  os << "; mode " << mode_name(mode) << "\n; V =";
  for (const auto& v : v_vocab) os << " " << v.spelling();
  os << "\n; W =";
  for (const auto& v : w_vocab) os << " " << v.spelling();
  os << "\n; U =";
  for (const auto& c : choices) os << " " << c.display();
  os << "\n";
  for (const auto& f : scheme_formulas(*this))
    os << "; " << f.role << "\n" << print_formula(f.formula) << "\n";
  return os.str();
}

namespace {

void require_spec(const SystemFamily& family, const HyperSpec& spec) {
  auto diags = validate_spec(family, spec);
  if (!diags.empty()) {
    std::string msg = "invalid specification:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw Error(msg);
  }
}

SchemeSystem common(const SystemFamily& family, const HyperSpec& spec, Mode mode) {
  SchemeSystem s;
  s.mode = mode;
  s.v_vocab = family.composed_vocab(spec.k);
  std::vector<Expr> init;
  for (int i = 1; i <= spec.k; ++i) init.push_back(rename_copy(family.trace(i).init, i));
  init.push_back(spec.pre);
  s.alpha = conj(init);
  s.beta = bad_constraint(spec);
  return s;
}

}  // namespace

SchemeSystem build_ksafety_scheme(const SystemFamily& input, const HyperSpec& spec) {
  if (!spec.is_ksafety())
    throw Error("k-safety scheme needs a purely universal specification (l = k)");
  SystemFamily family = input.totalized();
  require_spec(family, spec);
  SchemeSystem s = common(family, spec, Mode::KSafety);
  for (const auto& m : schedules(spec.k)) {
    s.choices.push_back(ChoiceTag{m, std::monostate{}});
    s.gamma.push_back(negate(valid_constraint(m, spec)));
    s.delta.push_back(delta_exists_labels(family, m, spec.k));
  }
  s.check();
  return s;
}

SchemeSystem build_game_finite_scheme(const SystemFamily& input, const HyperSpec& spec) {
  if (spec.is_ksafety())
    throw Error("specification has no existential traces; use ksafety mode");
  SystemFamily family = input.totalized();
  require_spec(family, spec);
  std::vector<std::vector<Expr>> tuples{{}};
  for (int i = spec.l + 1; i <= spec.k; ++i) {
    const auto& ts = family.trace(i);
    if (!ts.label || !ts.label_domain)
      throw Error("trace " + std::to_string(i) +
                  " is existential and needs a label with a finite (domain ...)");
    std::vector<std::vector<Expr>> next;
    for (const auto& t : tuples)
      for (const auto& c : *ts.label_domain) {
        auto e = t;
        e.push_back(c);
        next.push_back(e);
      }
    tuples = std::move(next);
  }
  SchemeSystem s = common(family, spec, Mode::GameFinite);
  s.w_vocab = family.label_vars(1, spec.l);
  for (const auto& m : schedules(spec.k)) {
    for (const auto& t : tuples) {
      s.choices.push_back(ChoiceTag{m, t});
      s.gamma.push_back(negate(valid_constraint(m, spec)));
      s.delta.push_back(delta_concrete_choice(family, m, spec, t));
    }
  }
  s.check();
  return s;
}

SchemeSystem build_game_restricted_scheme(const SystemFamily& input, const HyperSpec& spec,
                                          const std::vector<Restriction>& restrictions) {
  if (spec.is_ksafety())
    throw Error("specification has no existential traces; use ksafety mode");
  if (restrictions.empty())
    throw Error("restricted mode needs at least one restriction; (restrictions true) gives the unrestricted game");
  SystemFamily family = input.totalized();
  require_spec(family, spec);
  Vocabulary composed = family.composed_vocab(spec.k);
  for (const auto& r : restrictions) make_restriction(r.predicate, composed);
  SchemeSystem s = common(family, spec, Mode::GameRestricted);
  s.w_vocab = family.label_vars(1, spec.l);
  for (const auto& m : schedules(spec.k)) {
    for (size_t j = 0; j < restrictions.size(); ++j) {
      s.choices.push_back(ChoiceTag{m, RestrictionChoice{j + 1, restrictions[j]}});
      s.gamma.push_back(negate(valid_constraint(m, spec)));
      s.delta.push_back(delta_restricted(family, m, spec, restrictions[j]));
    }
  }
  s.check();
  return s;
}

}  // namespace hyperhorn
