#include "hyperhorn/oracle.hpp"

#include <deque>
#include <set>

#include "hyperhorn/composition.hpp"
#include "hyperhorn/formula_io.hpp"
#include "hyperhorn/simplify.hpp"

namespace hyperhorn {

namespace {

int64_t parse_int(const SExpr& s) {
  if (s.is_atom) {
    try {
      size_t used = 0;
      long long v = std::stoll(s.text, &used);
      if (used == s.text.size()) return v;
    } catch (const std::exception&) {
    }
  } else if (s.is("-") && s.items.size() == 2) {
    return -parse_int(s.items[1]);
  }
  parse_fail(s, "expected an integer");
}

std::vector<std::vector<Value>> product(const std::vector<std::vector<Value>>& choices,
                                        size_t cap, const std::string& what) {
  std::vector<std::vector<Value>> out{{}};
  for (const auto& c : choices) {
    if (c.empty()) return {};
    if (out.size() * c.size() > cap)
      throw Error(what + " exceeds the configured cap of " + std::to_string(cap));
    std::vector<std::vector<Value>> next;
    next.reserve(out.size() * c.size());
    for (const auto& prefix : out)
      for (const auto& v : c) {
        auto e = prefix;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Value> range(int64_t lo, int64_t hi) {
  std::vector<Value> out;
  for (int64_t v = lo; v <= hi; ++v) out.push_back(Value::integer(v));
  return out;
}

std::vector<Value> values_of(const Var& v, const Bounds& b, size_t cap) {
  if (v.sort.is_bool()) return {Value::boolean(false), Value::boolean(true)};
  auto it = b.vars.find(v.name);
  if (it == b.vars.end()) throw Error("no bounds for variable " + v.name);
  const VarBounds& vb = it->second;
  if (vb.lo > vb.hi) throw Error("empty range for " + v.name);
  if (v.sort.is_int()) {
    if (vb.index) throw Error(v.name + " is not an array");
    return range(vb.lo, vb.hi);
  }
  if (!vb.index) throw Error("array " + v.name + " needs an (index lo hi) range");
  if (!v.sort.index().is_int() || v.sort.element().is_array())
    throw Error("array " + v.name + ": only Int-indexed arrays of Int or Bool are enumerable");
  auto [ilo, ihi] = *vb.index;
  std::vector<std::vector<Value>> cells;
  std::vector<Value> elem = v.sort.element().is_bool()
                                ? std::vector<Value>{Value::integer(0), Value::integer(1)}
                                : range(vb.lo, vb.hi);
  for (int64_t i = ilo; i <= ihi; ++i) cells.push_back(elem);
  std::vector<Value> out;
  for (const auto& c : product(cells, cap, "array " + v.name)) {
    std::vector<int64_t> e;
    for (const auto& x : c) e.push_back(x.i);
    out.push_back(Value::array(ilo, e));
  }
  return out;
}

Expr in_box(const Vocabulary& vocab, const Bounds& b, bool primed) {
  std::vector<Expr> parts;
  for (const auto& v0 : vocab) {
    Var v = primed ? v0.prime() : v0;
    if (v.sort.is_bool()) continue;
    const VarBounds& vb = b.vars.at(v0.name);
    if (v.sort.is_int()) {
      parts.push_back(le(int_lit(vb.lo), var_expr(v)));
      parts.push_back(le(var_expr(v), int_lit(vb.hi)));
    } else if (v.sort.element().is_int()) {
      for (int64_t i = vb.index->first; i <= vb.index->second; ++i) {
        Expr cell = select(var_expr(v), int_lit(i));
        parts.push_back(le(int_lit(vb.lo), cell));
        parts.push_back(le(cell, int_lit(vb.hi)));
      }
    }
  }
  return conj(parts);
}

}  // namespace

Bounds parse_bounds(std::string_view text) {
  SExpr top = read_sexpr(text);
  if (!top.is("bounds")) parse_fail(top, "expected (bounds ...)");
  Bounds b;
  std::set<std::string> seen;
  for (size_t i = 1; i < top.items.size(); ++i) {
    const SExpr& e = top.items[i];
    if (!e.is_list() || e.items.empty() || !e.items[0].is_atom) parse_fail(e, "malformed bound");
    const std::string& name = e.items[0].text;
    if (!seen.insert(name).second) parse_fail(e, "duplicate bound for " + name);
    if (name == "max-states" && e.items.size() == 2) {
      b.max_states = static_cast<size_t>(parse_int(e.items[1]));
    } else if (name == "widen" && e.items.size() == 2) {
      b.widen = parse_int(e.items[1]);
    } else if (name == "label" && e.items.size() == 3) {
      b.label = std::make_pair(parse_int(e.items[1]), parse_int(e.items[2]));
    } else if (e.items.size() == 3 && e.items[1].is_list() && e.items[1].is("index")) {
      const SExpr& idx = e.items[1];
      const SExpr& el = e.items[2];
      if (idx.items.size() != 3 || !el.is("elem") || el.items.size() != 3)
        parse_fail(e, "expected (name (index lo hi) (elem lo hi))");
      VarBounds vb;
      vb.index = std::make_pair(parse_int(idx.items[1]), parse_int(idx.items[2]));
      vb.lo = parse_int(el.items[1]);
      vb.hi = parse_int(el.items[2]);
      b.vars[name] = vb;
    } else if (e.items.size() == 3) {
      b.vars[name] = VarBounds{parse_int(e.items[1]), parse_int(e.items[2]), std::nullopt};
    } else {
      parse_fail(e, "malformed bound for " + name);
    }
    if (b.vars.count(name) && b.vars[name].lo > b.vars[name].hi) parse_fail(e, "empty range");
  }
  return b;
}

Assignment ExplicitSystem::assignment(uint32_t s, int copy) const {
  Assignment a;
  const auto& vals = states.at(s);
  size_t j = 0;
  for (const auto& v : vocab) a.set(copy ? v.with_copy(copy) : v, vals[j++]);
  return a;
}

std::string ExplicitSystem::show(uint32_t s) const {
  if (s == kSink) return "<sink>";
  std::string out = "(";
  size_t j = 0;
  for (const auto& v : vocab) {
    out += (j ? " " : "") + v.name + "=" + states[s][j].to_string();
    ++j;
  }
  return out + ")";
}

ExplicitSystem enumerate(const TransitionSystem& ts, const Bounds& bounds) {
  ExplicitSystem sys;
  sys.vocab = ts.vocab;
  sys.label = ts.label;
  std::vector<std::vector<Value>> choices;
  for (const auto& v : ts.vocab) choices.push_back(values_of(v, bounds, bounds.max_states));
  sys.states = product(choices, bounds.max_states, "state count");
  if (ts.label) {
    if (ts.label_domain) {
      for (const auto& c : *ts.label_domain) sys.labels.push_back(literal_value(c));
    } else if (bounds.label) {
      sys.labels = range(bounds.label->first, bounds.label->second);
    } else {
      throw Error("label " + ts.label->name + " has no finite domain; give a (label lo hi) bound");
    }
  } else {
    sys.labels.push_back(Value::integer(0));
  }
  const size_t n = sys.states.size();
  const size_t nl = sys.labels.size();
  sys.succ.assign(n, std::vector<std::vector<uint32_t>>(nl));
  sys.cut.assign(n, std::vector<bool>(nl, false));
  sys.uncertain.assign(n, std::vector<bool>(nl, false));
  sys.label_cut.assign(n, false);
  sys.label_uncertain.assign(n, false);
  sys.initial.assign(n, false);
  sys.stuck.assign(n, false);

  Expr tr = conj({ts.tr, ts.label_guard()});
  Vocabulary next = ts.vocab.primed();
  Expr leaves = eliminate_exists(next.vars(), conj({tr, not_(in_box(ts.vocab, bounds, true))}));
  bool symbolic_cut = !contains_quantifier(leaves);
  std::optional<Expr> label_leaves;
  if (ts.label && !ts.label_domain) {
    Expr l = var_expr(*ts.label);
    Expr out_of_range = or_({lt(l, int_lit(bounds.label->first)), gt(l, int_lit(bounds.label->second))});
    std::vector<Var> bound = next.vars();
    bound.insert(bound.begin(), *ts.label);
    label_leaves = eliminate_exists(bound, conj({tr, out_of_range}));
  }

  // widened box for the non-symbolic fallback
  std::vector<std::vector<Value>> wide;
  bool can_widen = true;
  for (const auto& v : ts.vocab) {
    if (v.sort.is_bool()) {
      wide.push_back({Value::boolean(false), Value::boolean(true)});
    } else if (v.sort.is_int()) {
      const VarBounds& vb = bounds.vars.at(v.name);
      wide.push_back(range(vb.lo - bounds.widen, vb.hi + bounds.widen));
    } else {
      can_widen = false;
    }
  }

  auto env_for = [&](uint32_t s, const Value& lab, const std::vector<Value>* post) {
    Assignment a = sys.assignment(s);
    if (ts.label) a.set(*ts.label, lab);
    if (post) {
      size_t j = 0;
      for (const auto& v : next) a.set(v, (*post)[j++]);
    }
    return a;
  };
  auto inside = [&](const std::vector<Value>& st) {
    size_t j = 0;
    for (const auto& v : ts.vocab) {
      const Value& x = st[j++];
      if (x.kind == Value::Kind::Int) {
        const VarBounds& vb = bounds.vars.at(v.name);
        if (x.i < vb.lo || x.i > vb.hi) return false;
      }
    }
    return true;
  };

  for (uint32_t s = 0; s < n; ++s) {
    try {
      sys.initial[s] = holds(ts.init, sys.assignment(s));
    } catch (const EvalError&) {
      throw Error("initial condition cannot be evaluated on state " + sys.show(s));
    }
    for (size_t li = 0; li < nl; ++li) {
      const Value& lab = sys.labels[li];
      for (uint32_t t = 0; t < n; ++t) {
        try {
          if (holds(tr, env_for(s, lab, &sys.states[t]))) sys.succ[s][li].push_back(t);
        } catch (const EvalError&) {
          sys.uncertain[s][li] = true;
        }
      }
      if (symbolic_cut) {
        try {
          sys.cut[s][li] = holds(leaves, env_for(s, lab, nullptr));
        } catch (const EvalError&) {
          sys.uncertain[s][li] = true;
        }
      } else if (can_widen) {
        bool found = false;
        for (const auto& post : product(wide, SIZE_MAX, "widened box")) {
          if (inside(post)) continue;
          try {
            if (holds(tr, env_for(s, lab, &post))) {
              found = true;
              break;
            }
          } catch (const EvalError&) {
          }
        }
        sys.cut[s][li] = found;
        if (!found) sys.uncertain[s][li] = true;
      } else {
        sys.uncertain[s][li] = true;
      }
    }
    if (label_leaves) {
      try {
        sys.label_cut[s] = holds(*label_leaves, sys.assignment(s));
      } catch (const EvalError&) {
        sys.label_uncertain[s] = true;
      }
    }
  }

  for (uint32_t s = 0; s < n; ++s) {
    bool moves = sys.label_cut[s] || sys.label_uncertain[s];
    for (size_t li = 0; li < nl; ++li)
      moves = moves || !sys.succ[s][li].empty() || sys.cut[s][li] || sys.uncertain[s][li];
    if (!moves) {
      sys.stuck[s] = true;
      for (size_t li = 0; li < nl; ++li) sys.succ[s][li] = {s};
      continue;
    }
    for (size_t li = 0; li < nl; ++li)
      if (sys.cut[s][li] || (sys.uncertain[s][li] && sys.succ[s][li].empty()))
        sys.succ[s][li].push_back(ExplicitSystem::kSink);
  }
  return sys;
}

namespace {

std::vector<std::vector<uint32_t>> index_product(const std::vector<size_t>& sizes) {
  std::vector<std::vector<uint32_t>> out{{}};
  for (size_t n : sizes) {
    std::vector<std::vector<uint32_t>> next;
    for (const auto& p : out)
      for (uint32_t i = 0; i < n; ++i) {
        auto e = p;
        e.push_back(i);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ExplicitGame build_explicit_game(const SystemFamily& family, const HyperSpec& spec,
                                 const Bounds& bounds) {
  if (spec.k < 1 || spec.l < 1 || spec.l > spec.k) throw Error("oracle: bad trace counts");
  auto diags = validate_spec(family, spec);
  if (!diags.empty()) throw Error("oracle: invalid specification: " + diags.front());
  const int k = spec.k;
  std::vector<ExplicitSystem> owned;
  owned.reserve(family.size());
  for (const auto& ts : family.systems()) owned.push_back(enumerate(ts, bounds));
  auto sys = [&](int i) -> const ExplicitSystem& {
    return owned.size() == 1 ? owned[0] : owned.at(static_cast<size_t>(i - 1));
  };

  std::vector<std::vector<bool>> obs(static_cast<size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    const auto& s = sys(i);
    for (uint32_t x = 0; x < s.states.size(); ++x)
      obs[static_cast<size_t>(i)].push_back(holds(spec.obs[static_cast<size_t>(i - 1)], s.assignment(x)));
  }

  ExplicitGame g;
  g.k = k;
  g.l = spec.l;
  g.states.push_back({});  // sink
  g.bad.push_back(false);
  g.initial.push_back(false);
  g.moves.push_back({});

  auto composed = [&](const std::vector<uint32_t>& t) {
    Assignment a;
    for (int i = 1; i <= k; ++i) {
      Assignment one = sys(i).assignment(t[static_cast<size_t>(i - 1)], i);
      for (const auto& [v, x] : one.entries()) a.set(v, x);
    }
    return a;
  };

  std::map<std::vector<uint32_t>, uint32_t> index;
  std::deque<uint32_t> work;
  auto node = [&](const std::vector<uint32_t>& t) -> uint32_t {
    for (uint32_t x : t)
      if (x == ExplicitSystem::kSink) {
        g.cut = true;
        return 0;
      }
    auto [it, fresh] = index.emplace(t, static_cast<uint32_t>(g.states.size()));
    if (fresh) {
      g.states.push_back(t);
      bool all_obs = true;
      for (int i = 1; i <= k; ++i) all_obs = all_obs && obs[static_cast<size_t>(i)][t[static_cast<size_t>(i - 1)]];
      g.bad.push_back(all_obs && !holds(spec.phi, composed(t)));
      g.initial.push_back(false);
      g.moves.push_back({});
      work.push_back(it->second);
      if (g.states.size() > bounds.max_states)
        throw Error("oracle: composed state count exceeds " + std::to_string(bounds.max_states));
    }
    return it->second;
  };

  // initial composed states
  std::vector<std::vector<uint32_t>> init_choices;
  for (int i = 1; i <= k; ++i) {
    std::vector<uint32_t> ok;
    for (uint32_t x = 0; x < sys(i).states.size(); ++x)
      if (sys(i).initial[x]) ok.push_back(x);
    init_choices.push_back(ok);
  }
  std::vector<std::vector<uint32_t>> inits{{}};
  for (const auto& c : init_choices) {
    std::vector<std::vector<uint32_t>> next;
    for (const auto& p : inits)
      for (uint32_t x : c) {
        auto e = p;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    inits = std::move(next);
    if (inits.size() > bounds.max_states) throw Error("oracle: too many initial composed states");
  }
  for (const auto& t : inits)
    if (holds(spec.pre, composed(t))) g.initial[node(t)] = true;

  std::vector<size_t> forall_sizes, exists_sizes;
  for (int i = 1; i <= spec.l; ++i) forall_sizes.push_back(sys(i).labels.size());
  for (int i = spec.l + 1; i <= k; ++i) exists_sizes.push_back(sys(i).labels.size());
  const auto forall_tuples = index_product(forall_sizes);
  const auto exists_tuples = index_product(exists_sizes);
  const auto all_schedules = schedules(k);

  while (!work.empty()) {
    uint32_t f = work.front();
    work.pop_front();
    if (g.bad[f]) continue;
    const std::vector<uint32_t> t = g.states[f];
    for (int i = 1; i <= k; ++i) {
      const auto& s = sys(i);
      uint32_t x = t[static_cast<size_t>(i - 1)];
      if (s.label_cut[x] || s.label_uncertain[x]) {
        (i <= spec.l ? g.forall_label_cut : g.exists_label_cut) = true;
        if (s.label_uncertain[x]) g.uncertain = true;
      }
    }
    std::vector<bool> o;
    for (int i = 1; i <= k; ++i) o.push_back(obs[static_cast<size_t>(i)][t[static_cast<size_t>(i - 1)]]);
    for (const auto& fl : forall_tuples) {
      ExplicitGame::VerifierNode vn;
      vn.falsifier = f;
      vn.forall_labels = fl;
      for (const auto& m : all_schedules) {
        bool valid;
        bool none = true, all = true;
        for (int i = 1; i <= k; ++i) {
          if (o[static_cast<size_t>(i - 1)]) none = false;
          else all = false;
        }
        if (m.is_full(k)) {
          valid = none || all;
        } else {
          valid = true;
          for (int i : m.members()) valid = valid && !o[static_cast<size_t>(i - 1)];
        }
        if (!valid) continue;
        for (const auto& el : exists_tuples) {
          ExplicitGame::ChoiceNode c;
          c.mask = m.mask;
          c.exists_labels = el;
          std::vector<std::vector<uint32_t>> posts{{}};
          for (int i = 1; i <= k; ++i) {
            uint32_t x = t[static_cast<size_t>(i - 1)];
            std::vector<uint32_t> opts;
            if (m.contains(i)) {
              uint32_t li = i <= spec.l ? fl[static_cast<size_t>(i - 1)]
                                        : el[static_cast<size_t>(i - spec.l - 1)];
              const auto& s = sys(i);
              opts = s.succ[x][li];
              if (s.uncertain[x][li]) g.uncertain = true;
            } else {
              opts = {x};
            }
            std::vector<std::vector<uint32_t>> next;
            for (const auto& p : posts)
              for (uint32_t y : opts) {
                auto e = p;
                e.push_back(y);
                next.push_back(std::move(e));
              }
            posts = std::move(next);
          }
          std::set<uint32_t> succ;
          for (const auto& p : posts) succ.insert(node(p));
          c.succ.assign(succ.begin(), succ.end());
          vn.choices.push_back(std::move(c));
        }
      }
      g.moves[f].push_back(static_cast<uint32_t>(g.verifier.size()));
      g.verifier.push_back(std::move(vn));
    }
  }
  if (g.cut) g.notes.push_back("some reached transitions leave the bounds (redirected to the safe sink)");
  if (g.uncertain) g.notes.push_back("some transitions could not be decided inside the bounds");
  if (g.forall_label_cut) g.notes.push_back("universal labels outside the label range are enabled");
  if (g.exists_label_cut) g.notes.push_back("existential labels outside the label range are enabled");
  return g;
}

OracleResult solve_attractor(const ExplicitGame& g) {
  const size_t nf = g.states.size();
  const size_t nv = g.verifier.size();
  std::vector<bool> in_f(nf, false), in_v(nv, false);
  std::vector<std::vector<bool>> in_c(nv);
  std::vector<size_t> pending(nv);
  // falsifier node -> (verifier node, choice) pairs that can move there
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pred(nf);
  for (uint32_t v = 0; v < nv; ++v) {
    const auto& vn = g.verifier[v];
    in_c[v].assign(vn.choices.size(), false);
    pending[v] = vn.choices.size();
    for (uint32_t c = 0; c < vn.choices.size(); ++c)
      for (uint32_t f : vn.choices[c].succ) pred[f].emplace_back(v, c);
  }
  std::deque<uint32_t> fq, vq;
  for (uint32_t f = 0; f < nf; ++f)
    if (g.bad[f]) {
      in_f[f] = true;
      fq.push_back(f);
    }
  for (uint32_t v = 0; v < nv; ++v)
    if (pending[v] == 0) {
      in_v[v] = true;
      vq.push_back(v);
    }
  while (!fq.empty() || !vq.empty()) {
    if (!vq.empty()) {
      uint32_t v = vq.front();
      vq.pop_front();
      uint32_t f = g.verifier[v].falsifier;
      if (!in_f[f]) {
        in_f[f] = true;
        fq.push_back(f);
      }
      continue;
    }
    uint32_t f = fq.front();
    fq.pop_front();
    for (auto [v, c] : pred[f]) {
      if (in_c[v][c]) continue;
      in_c[v][c] = true;
      if (--pending[v] == 0 && !in_v[v]) {
        in_v[v] = true;
        vq.push_back(v);
      }
    }
  }
  OracleResult r;
  r.falsifier_nodes = nf;
  r.verifier_nodes = nv;
  for (bool b : in_f) r.attractor_size += b ? 1 : 0;
  bool lost = false;
  for (uint32_t f = 0; f < nf; ++f) lost = lost || (g.initial[f] && in_f[f]);
  r.winner = lost ? OracleResult::Winner::Falsifier : OracleResult::Winner::Verifier;
  for (uint32_t v = 0; v < nv; ++v) {
    if (in_v[v]) continue;
    for (uint32_t c = 0; c < in_c[v].size(); ++c)
      if (!in_c[v][c]) {
        r.strategy[v] = c;
        break;
      }
  }
  r.notes = g.notes;
  if (lost) r.trusted = !g.exists_label_cut;
  else r.trusted = !g.cut && !g.uncertain && !g.forall_label_cut;
  return r;
}

OracleResult game_oracle(const SystemFamily& family, const HyperSpec& spec, const Bounds& bounds) {
  return solve_attractor(build_explicit_game(family, spec, bounds));
}

OracleResult ksafety_oracle(const SystemFamily& family, const HyperSpec& spec,
                            const Bounds& bounds) {
  if (!spec.is_ksafety()) throw Error("k-safety oracle needs l = k");
  return game_oracle(family, spec, bounds);
}

}  // namespace hyperhorn
