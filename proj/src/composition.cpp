#include "hyperhorn/composition.hpp"

#include <algorithm>

#include "hyperhorn/simplify.hpp"

namespace hyperhorn {

std::vector<int> Schedule::members() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Schedule::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<Schedule> schedules(int k) {
  if (k < 1 || k > 16) throw Error("schedules: k out of range");
  std::vector<Schedule> out;
  for (unsigned m = 1; m < (1u << k); ++m) out.push_back(Schedule{m});
  return out;
}

Restriction make_restriction(const Expr& p, const Vocabulary& composed) {
  if (!p.sort().is_bool()) throw SortError("restriction must be a Bool formula");
  if (contains_apply(p)) throw Error("restriction mentions an unknown predicate");
  for (const auto& v : free_vars(p)) {
    if (v.primed) throw Error("restriction mentions primed variable " + v.spelling());
    if (!composed.contains(v))
      throw Error("restriction mentions " + v.spelling() + ", which is not a state variable of a trace");
  }
  return Restriction{p};
}

namespace {

Expr obs(const HyperSpec& spec, int i) {
  return rename_copy(spec.obs.at(static_cast<size_t>(i) - 1), i);
}

Expr tr_copy(const SystemFamily& family, int i) {
  const auto& ts = family.trace(i);
  if (!ts.totalized) throw Error("transition relation of trace " + std::to_string(i) + " is not totalized");
  return rename_copy(ts.tr, i);
}

}  // namespace

Expr bad_constraint(const HyperSpec& spec) {
  std::vector<Expr> parts;
  for (int i = 1; i <= spec.k; ++i) parts.push_back(obs(spec, i));
  parts.push_back(negate(spec.phi));
  return conj(parts);
}

Expr valid_constraint(const Schedule& m, const HyperSpec& spec) {
  std::vector<Expr> outside;
  for (int i : m.members()) outside.push_back(negate(obs(spec, i)));
  if (!m.is_full(spec.k)) return conj(outside);
  std::vector<Expr> inside;
  for (int i = 1; i <= spec.k; ++i) inside.push_back(obs(spec, i));
  return or_({conj(outside), conj(inside)});
}

Expr delta_big(const SystemFamily& family, const Schedule& m, int k) {
  if (m.mask == 0 || m.mask >= (1u << k)) throw Error("schedule " + m.to_string() + " out of range");
  std::vector<Expr> parts;
  for (int i = 1; i <= k; ++i) {
    if (m.contains(i)) {
      parts.push_back(tr_copy(family, i));
    } else {
      Vocabulary vi = family.trace(i).vocab.with_copy(i);
      parts.push_back(equal_vocab(vi, vi.primed()));
    }
  }
  return conj(parts);
}

namespace {

std::vector<Var> labels_in(const SystemFamily& family, const Schedule& m, int from, int to) {
  std::vector<Var> out;
  for (int i = from; i <= to; ++i)
    if (m.contains(i))
      if (auto v = family.label_var(i)) out.push_back(*v);
  return out;
}

Expr bind_labels(const std::vector<Var>& vars, const Expr& body, bool hoistable) {
  if (vars.empty()) return body;
  return exists_(vars, body, hoistable);
}

}  // namespace

Expr delta_exists_labels(const SystemFamily& family, const Schedule& m, int k) {
  return bind_labels(labels_in(family, m, 1, k), delta_big(family, m, k), true);
}

Expr delta_concrete_choice(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
                           const std::vector<Expr>& ell_exists) {
  if (ell_exists.size() != static_cast<size_t>(spec.k - spec.l))
    throw Error("expected " + std::to_string(spec.k - spec.l) + " existential label constants");
  Substitution sub_map;
  for (int i = spec.l + 1; i <= spec.k; ++i) {
    const auto& ts = family.trace(i);
    const Expr& c = ell_exists[static_cast<size_t>(i - spec.l - 1)];
    if (!ts.label) throw Error("trace " + std::to_string(i) + " has no label variable");
    if (!ts.label_domain) throw Error("trace " + std::to_string(i) + " has an infinite label domain");
    const auto& dom = *ts.label_domain;
    if (std::find(dom.begin(), dom.end(), c) == dom.end())
      throw Error("label constant outside the declared domain of trace " + std::to_string(i));
    sub_map[ts.label->with_copy(i)] = c;
  }
  return substitute(delta_big(family, m, spec.k), sub_map);
}

Expr allowed(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
             const Restriction& p) {
  std::vector<Var> bound;
  EliminationOptions opts;
  for (const auto& v : family.composed_vocab(spec.k).primed()) bound.push_back(v);
  for (const auto& v : labels_in(family, m, spec.l + 1, spec.k)) {
    bound.push_back(v);
    const auto& ts = family.trace(v.copy);
    if (ts.label_domain) opts.finite_domains[v] = *ts.label_domain;
  }
  Expr body = conj({delta_big(family, m, spec.k), prime_free(p.predicate)});
  return eliminate_exists(bound, body, opts);
}

Expr delta_restricted(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
                      const Restriction& p) {
  Expr step = bind_labels(labels_in(family, m, spec.l + 1, spec.k), delta_big(family, m, spec.k), true);
  Expr a = allowed(family, m, spec, p);
  Expr post = prime_free(p.predicate);
  if (a.is_false()) return step;
  if (a.is_true()) return conj({step, post});
  return and_({step, implies(a, post)});
}

}  // namespace hyperhorn
