#include "hyperhorn/system.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "hyperhorn/simplify.hpp"
#include "hyperhorn/solver.hpp"

namespace hyperhorn {

Vocabulary TransitionSystem::tr_vocab() const {
  Vocabulary out = vocab;
  if (label) out.add(*label);
  out.add_all(vocab.primed());
  return out;
}

Expr TransitionSystem::label_guard() const {
  if (!label || !label_domain) return true_expr();
  std::vector<Expr> alts;
  for (const auto& c : *label_domain) alts.push_back(eq(var_expr(*label), c));
  return disj(alts);
}

SystemFamily::SystemFamily(std::vector<TransitionSystem> systems) : systems_(std::move(systems)) {
  if (systems_.empty()) throw Error("system family is empty");
}

const TransitionSystem& SystemFamily::trace(int i) const {
  if (systems_.empty()) throw Error("system family is empty");
  if (systems_.size() == 1) return systems_[0];
  if (i < 1 || static_cast<size_t>(i) > systems_.size())
    throw Error("no system for trace " + std::to_string(i));
  return systems_[static_cast<size_t>(i) - 1];
}

SystemFamily SystemFamily::totalized() const {
  std::vector<TransitionSystem> out;
  for (const auto& ts : systems_) out.push_back(ts.totalized ? ts : totalize(ts));
  return SystemFamily(out);
}

Vocabulary SystemFamily::composed_vocab(int k) const {
  Vocabulary out;
  for (int i = 1; i <= k; ++i) out.add_all(trace(i).vocab.with_copy(i));
  return out;
}

std::optional<Var> SystemFamily::label_var(int i) const {
  const auto& ts = trace(i);
  if (!ts.label) return std::nullopt;
  return ts.label->with_copy(i);
}

Vocabulary SystemFamily::label_vars(int from, int to) const {
  Vocabulary out;
  for (int i = from; i <= to; ++i)
    if (auto v = label_var(i)) out.add(*v);
  return out;
}

TransitionSystem totalize(const TransitionSystem& ts) {
  TransitionSystem out = ts;
  Expr t = conj({ts.tr, ts.label_guard()});
  std::vector<Var> moves;
  if (ts.label) moves.push_back(*ts.label);
  for (const auto& v : ts.vocab.primed()) moves.push_back(v);
  EliminationOptions opts;
  if (ts.label && ts.label_domain) opts.finite_domains[*ts.label] = *ts.label_domain;
  Expr enabled = eliminate_exists(moves, t, opts);
  Expr stuck = simplify(negate(enabled));
  out.tr = disj({t, conj({stuck, equal_vocab(ts.vocab.primed(), ts.vocab)})});
  out.totalized = true;
  return out;
}

Expr determinism_query(const TransitionSystem& ts) {
  // V'' spelled as fresh primed variables
  std::vector<Var> taken;
  for (const auto& v : ts.tr_vocab()) taken.push_back(v);
  Substitution to_second;
  std::vector<Expr> differ;
  for (const auto& v : ts.vocab) {
    Var second(fresh_name(v.name + "_alt", taken), v.sort, v.copy, true);
    taken.push_back(second);
    to_second[v.prime()] = var_expr(second);
    differ.push_back(not_(eq(var_expr(v.prime()), var_expr(second))));
  }
  Expr tr = conj({ts.tr, ts.label_guard()});
  return conj({tr, substitute(tr, to_second), disj(differ)});
}

DeterminismResult check_determinism(const TransitionSystem& ts, const SolverConfig& config) {
  DeterminismResult r;
  auto v = check_validity(negate(determinism_query(ts)), config);
  switch (v.kind) {
    case ValidityResult::Kind::Valid:
      r.kind = DeterminismResult::Kind::Deterministic;
      break;
    case ValidityResult::Kind::Invalid:
      r.kind = DeterminismResult::Kind::Nondeterministic;
      r.witness = v.counter_model;
      break;
    case ValidityResult::Kind::Unknown:
      r.kind = DeterminismResult::Kind::Unknown;
      r.reason = v.reason;
      break;
  }
  return r;
}

namespace {

void check_vars(const Expr& f, const std::string& what, std::vector<std::string>& diags,
                const std::function<std::string(const Var&)>& bad) {
  for (const auto& v : free_vars(f)) {
    std::string why = bad(v);
    if (!why.empty()) diags.push_back(what + ": variable " + v.spelling() + " " + why);
  }
  if (!f.sort().is_bool()) diags.push_back(what + ": not a Bool formula");
  if (contains_apply(f)) diags.push_back(what + ": unknown predicate application");
}

}  // namespace

std::vector<std::string> validate_spec(const SystemFamily& family, const HyperSpec& spec) {
  std::vector<std::string> d;
  if (spec.k < 1) d.push_back("k must be at least 1");
  if (spec.l < 1) d.push_back("at least one universal trace quantifier is required");
  if (spec.l > spec.k) d.push_back("more universal quantifiers than traces (l > k)");
  if (family.size() != 1 && family.size() != static_cast<size_t>(spec.k))
    d.push_back("expected one shared system or one system per trace (" + std::to_string(spec.k) +
                "), got " + std::to_string(family.size()));
  if (spec.obs.size() != static_cast<size_t>(spec.k))
    d.push_back("expected " + std::to_string(spec.k) + " observation formulas, got " +
                std::to_string(spec.obs.size()));
  if (!d.empty()) return d;
  Vocabulary composed = family.composed_vocab(spec.k);
  auto over_composed = [&](const Var& v) -> std::string {
    if (v.primed) return "is primed";
    if (v.copy == 0) return "lacks a copy index";
    if (v.copy > spec.k) return "has copy index beyond k";
    if (!composed.contains(v)) return "is not declared";
    return "";
  };
  check_vars(spec.pre, "pre", d, over_composed);
  check_vars(spec.phi, "global", d, over_composed);
  for (int i = 1; i <= spec.k; ++i) {
    const auto& vocab = family.trace(i).vocab;
    check_vars(spec.obs[static_cast<size_t>(i) - 1], "observe " + std::to_string(i), d,
               [&](const Var& v) -> std::string {
                 if (v.copy != 0) return "carries a copy index";
                 if (v.primed) return "is primed";
                 if (!vocab.contains(v)) return "is not a state variable";
                 return "";
               });
  }
  for (size_t s = 0; s < family.size(); ++s) {
    const auto& ts = family.systems()[s];
    std::string tag = "system " + std::to_string(s + 1);
    Vocabulary trv = ts.tr_vocab();
    check_vars(ts.init, tag + " init", d, [&](const Var& v) -> std::string {
      return ts.vocab.contains(v) ? "" : "is not a state variable";
    });
    check_vars(ts.tr, tag + " tr", d, [&](const Var& v) -> std::string {
      return trv.contains(v) ? "" : "is not in V, l, V'";
    });
  }
  return d;
}

// ---- files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Var parse_decl(const SExpr& d) {
  if (!d.is_list() || d.items.size() != 2 || !d.items[0].is_atom)
    parse_fail(d, "expected (name sort)");
  Var v = parse_spelling(d.items[0].text);
  if (v.copy != 0 || v.primed) parse_fail(d, "declared names may not use '@' or a trailing quote");
  v.sort = parse_sort(d.items[1]);
  return v;
}

}  // namespace

TransitionSystem parse_system(std::string_view text) {
  SExpr top = read_sexpr(text);
  if (!top.is("system")) parse_fail(top, "expected (system ...)");
  TransitionSystem ts;
  const SExpr* init = nullptr;
  const SExpr* tr = nullptr;
  std::set<std::string> seen;
  for (size_t i = 1; i < top.items.size(); ++i) {
    const SExpr& item = top.items[i];
    if (!item.is_list() || item.items.empty() || !item.items[0].is_atom)
      parse_fail(item, "expected a (keyword ...) entry");
    const std::string& kw = item.items[0].text;
    if (!seen.insert(kw).second) parse_fail(item, "duplicate entry '" + kw + "'");
    if (kw == "vars") {
      for (size_t j = 1; j < item.items.size(); ++j) {
        Var v = parse_decl(item.items[j]);
        if (ts.vocab.contains(v)) parse_fail(item.items[j], "duplicate variable " + v.name);
        ts.vocab.add(v);
      }
    } else if (kw == "label") {
      if (item.items.size() < 2 || item.items.size() > 3) parse_fail(item, "expected (label (name sort) [(domain ...)])");
      ts.label = parse_decl(item.items[1]);
      if (item.items.size() == 3) {
        const SExpr& dom = item.items[2];
        if (!dom.is("domain") || dom.items.size() < 2) parse_fail(dom, "expected (domain c1 c2 ...)");
        std::vector<Expr> values;
        for (size_t j = 1; j < dom.items.size(); ++j) {
          Expr c = parse_term(dom.items[j], Vocabulary{});
          if (!(c.sort() == ts.label->sort)) parse_fail(dom.items[j], "label constant has wrong sort");
          if (std::find(values.begin(), values.end(), c) != values.end())
            parse_fail(dom.items[j], "duplicate label constant");
          values.push_back(c);
        }
        ts.label_domain = values;
      }
    } else if (kw == "init") {
      if (item.items.size() != 2) parse_fail(item, "expected (init F)");
      init = &item.items[1];
    } else if (kw == "tr") {
      if (item.items.size() != 2) parse_fail(item, "expected (tr F)");
      tr = &item.items[1];
    } else {
      parse_fail(item, "unknown system entry '" + kw + "'");
    }
  }
  if (ts.label && ts.vocab.contains(*ts.label)) parse_fail(top, "label name clashes with a state variable");
  if (!tr) parse_fail(top, "missing (tr F)");
  if (init) ts.init = parse_formula(*init, ts.vocab);
  ts.tr = parse_formula(*tr, ts.tr_vocab());
  return ts;
}

HyperSpec parse_spec(std::string_view text, const SystemFamily& family) {
  SExpr top = read_sexpr(text);
  if (!top.is("spec")) parse_fail(top, "expected (spec ...)");
  HyperSpec spec;
  int universals = -1, existentials = 0;
  const SExpr* pre = nullptr;
  const SExpr* global = nullptr;
  std::map<int, const SExpr*> observe;
  for (size_t i = 1; i < top.items.size(); ++i) {
    const SExpr& item = top.items[i];
    if (!item.is_list() || item.items.empty() || !item.items[0].is_atom)
      parse_fail(item, "expected a (keyword ...) entry");
    const std::string& kw = item.items[0].text;
    auto count = [&]() {
      if (item.items.size() != 2 || !item.items[1].is_atom) parse_fail(item, "expected (" + kw + " n)");
      try {
        return std::stoi(item.items[1].text);
      } catch (...) {
        parse_fail(item.items[1], "expected a number");
      }
    };
    if (kw == "forall") {
      universals = count();
    } else if (kw == "exists") {
      existentials = count();
    } else if (kw == "pre") {
      if (item.items.size() != 2) parse_fail(item, "expected (pre F)");
      pre = &item.items[1];
    } else if (kw == "global") {
      if (item.items.size() != 2) parse_fail(item, "expected (global F)");
      global = &item.items[1];
    } else if (kw == "observe") {
      if (item.items.size() != 3 || !item.items[1].is_atom) parse_fail(item, "expected (observe i F)");
      int idx = 0;
      try {
        idx = std::stoi(item.items[1].text);
      } catch (...) {
        parse_fail(item.items[1], "expected a trace index");
      }
      if (observe.count(idx)) parse_fail(item, "duplicate observation for trace " + std::to_string(idx));
      observe[idx] = &item.items[2];
    } else {
      parse_fail(item, "unknown spec entry '" + kw + "'");
    }
  }
  if (universals < 0) parse_fail(top, "missing (forall l)");
  if (universals < 1) parse_fail(top, "at least one universal trace is required");
  if (existentials < 0) parse_fail(top, "negative existential count");
  spec.l = universals;
  spec.k = universals + existentials;
  if (family.size() != 1 && family.size() != static_cast<size_t>(spec.k))
    parse_fail(top, "spec has " + std::to_string(spec.k) + " traces but " +
                        std::to_string(family.size()) + " systems were given");
  Vocabulary composed = family.composed_vocab(spec.k);
  if (pre) spec.pre = parse_formula(*pre, composed);
  if (global) spec.phi = parse_formula(*global, composed);
  for (const auto& [idx, f] : observe)
    if (idx < 1 || idx > spec.k) parse_fail(*f, "observation index out of range");
  for (int i = 1; i <= spec.k; ++i) {
    auto it = observe.find(i);
    spec.obs.push_back(it == observe.end() ? true_expr()
                                           : parse_formula(*it->second, family.trace(i).vocab));
  }
  return spec;
}

std::vector<Expr> parse_formula_list(std::string_view text, std::string_view head,
                                     const Vocabulary& vocab) {
  SExpr top = read_sexpr(text);
  if (!top.is(head)) parse_fail(top, "expected (" + std::string(head) + " ...)");
  std::vector<Expr> out;
  for (size_t i = 1; i < top.items.size(); ++i) out.push_back(parse_formula(top.items[i], vocab));
  return out;
}

}  // namespace hyperhorn
