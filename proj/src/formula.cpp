#include "hyperhorn/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hyperhorn {

// ---- sorts

Sort Sort::integer() {
  Sort s;
  s.kind_ = Kind::Int;
  return s;
}

Sort Sort::boolean() {
  Sort s;
  s.kind_ = Kind::Bool;
  return s;
}

Sort Sort::array(const Sort& index, const Sort& element) {
  Sort s;
  s.kind_ = Kind::Array;
  s.arr_ = std::make_shared<const std::pair<Sort, Sort>>(index, element);
  return s;
}

const Sort& Sort::index() const {
  if (!arr_) throw SortError("index() of non-array sort");
  return arr_->first;
}

const Sort& Sort::element() const {
  if (!arr_) throw SortError("element() of non-array sort");
  return arr_->second;
}

std::string Sort::to_string() const {
  switch (kind_) {
    case Kind::Int:
      return "Int";
    case Kind::Bool:
      return "Bool";
    case Kind::Array:
      return "(Array " + arr_->first.to_string() + " " + arr_->second.to_string() + ")";
  }
  return "?";
}

bool operator==(const Sort& a, const Sort& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Sort::Kind::Array) return true;
  return a.arr_->first == b.arr_->first && a.arr_->second == b.arr_->second;
}

std::strong_ordering operator<=>(const Sort& a, const Sort& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ != Sort::Kind::Array) return std::strong_ordering::equal;
  if (auto c = a.arr_->first <=> b.arr_->first; c != 0) return c;
  return a.arr_->second <=> b.arr_->second;
}

// ---- variables

std::string Var::spelling() const {
  std::string s = name;
  if (copy > 0) s += "@" + std::to_string(copy);
  if (primed) s += "'";
  return s;
}

Vocabulary::Vocabulary(std::initializer_list<Var> vs) {
  for (const auto& v : vs) add(v);
}

Vocabulary::Vocabulary(const std::vector<Var>& vs) {
  for (const auto& v : vs) add(v);
}

void Vocabulary::add(const Var& v) {
  if (contains(v)) throw Error("duplicate variable in vocabulary: " + v.spelling());
  vars_.push_back(v);
}

void Vocabulary::add_all(const Vocabulary& other) {
  for (const auto& v : other) add(v);
}

bool Vocabulary::contains(const Var& v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

std::optional<Var> Vocabulary::find(const Var& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return std::nullopt;
  return *it;
}

Vocabulary Vocabulary::primed() const {
  Vocabulary out;
  for (const auto& v : vars_) out.add(v.prime());
  return out;
}

Vocabulary Vocabulary::with_copy(int i) const {
  Vocabulary out;
  for (const auto& v : vars_) out.add(v.with_copy(i));
  return out;
}

std::vector<Sort> Vocabulary::sorts() const {
  std::vector<Sort> out;
  for (const auto& v : vars_) out.push_back(v.sort);
  return out;
}

Vocabulary concat(const Vocabulary& a, const Vocabulary& b) {
  Vocabulary out = a;
  out.add_all(b);
  return out;
}

// ---- expression access

Expr make_node(ExprNode n) {
  Expr e;
  e.node_ = std::make_shared<const ExprNode>(std::move(n));
  return e;
}

Op Expr::op() const { return node_->op; }
const Sort& Expr::sort() const { return node_->sort; }
int64_t Expr::int_value() const { return node_->ival; }
bool Expr::bool_value() const { return node_->ival != 0; }
const Var& Expr::var() const { return node_->var; }
const std::vector<Expr>& Expr::args() const { return node_->args; }
const std::vector<Var>& Expr::bound() const { return node_->bound; }
bool Expr::hoistable() const { return node_->hoistable; }
const std::string& Expr::predicate() const { return node_->pred; }
bool Expr::is_true() const { return op() == Op::BoolLit && bool_value(); }
bool Expr::is_false() const { return op() == Op::BoolLit && !bool_value(); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const ExprNode& x = *a.node_;
  const ExprNode& y = *b.node_;
  if (x.op != y.op || !(x.sort == y.sort) || x.ival != y.ival) return false;
  if (x.op == Op::Variable) return x.var == y.var && x.var.sort == y.var.sort;
  if (x.op == Op::Apply && x.pred != y.pred) return false;
  if (x.hoistable != y.hoistable || x.bound.size() != y.bound.size()) return false;
  for (size_t i = 0; i < x.bound.size(); ++i)
    if (!(x.bound[i] == y.bound[i]) || !(x.bound[i].sort == y.bound[i].sort)) return false;
  if (x.args.size() != y.args.size()) return false;
  for (size_t i = 0; i < x.args.size(); ++i)
    if (!(x.args[i] == y.args[i])) return false;
  return true;
}

bool operator<(const Expr& a, const Expr& b) {
  // total order used only for sets/maps of expressions
  const ExprNode& x = *a.node_;
  const ExprNode& y = *b.node_;
  if (x.op != y.op) return x.op < y.op;
  if (x.ival != y.ival) return x.ival < y.ival;
  if (x.op == Op::Variable) return x.var < y.var;
  if (x.pred != y.pred) return x.pred < y.pred;
  if (x.args.size() != y.args.size()) return x.args.size() < y.args.size();
  for (size_t i = 0; i < x.args.size(); ++i) {
    if (x.args[i] < y.args[i]) return true;
    if (y.args[i] < x.args[i]) return false;
  }
  if (x.bound != y.bound) return x.bound < y.bound;
  return false;
}

// ---- builders

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw SortError(msg);
}

Expr node(Op op, Sort sort, std::vector<Expr> args) {
  ExprNode n;
  n.op = op;
  n.sort = std::move(sort);
  n.args = std::move(args);
  return make_node(std::move(n));
}

void require_all(const std::vector<Expr>& args, const Sort& s, const char* what) {
  for (const auto& a : args)
    require(a.sort() == s, std::string(what) + ": expected " + s.to_string() +
                               " operand, got " + a.sort().to_string());
}

}  // namespace

Expr int_lit(int64_t v) {
  ExprNode n;
  n.op = Op::IntLit;
  n.sort = Sort::integer();
  n.ival = v;
  return make_node(std::move(n));
}

Expr bool_lit(bool b) {
  ExprNode n;
  n.op = Op::BoolLit;
  n.sort = Sort::boolean();
  n.ival = b ? 1 : 0;
  return make_node(std::move(n));
}

Expr true_expr() {
  static const Expr t = bool_lit(true);
  return t;
}

Expr false_expr() {
  static const Expr f = bool_lit(false);
  return f;
}

Expr var_expr(const Var& v) {
  ExprNode n;
  n.op = Op::Variable;
  n.sort = v.sort;
  n.var = v;
  return make_node(std::move(n));
}

Expr not_(const Expr& a) {
  require(a.sort().is_bool(), "not: expected Bool");
  return node(Op::Not, Sort::boolean(), {a});
}

Expr and_(std::vector<Expr> args) {
  require_all(args, Sort::boolean(), "and");
  return node(Op::And, Sort::boolean(), std::move(args));
}

Expr or_(std::vector<Expr> args) {
  require_all(args, Sort::boolean(), "or");
  return node(Op::Or, Sort::boolean(), std::move(args));
}

Expr implies(const Expr& a, const Expr& b) {
  require_all({a, b}, Sort::boolean(), "=>");
  return node(Op::Implies, Sort::boolean(), {a, b});
}

Expr eq(const Expr& a, const Expr& b) {
  require(a.sort() == b.sort(), "=: operand sorts differ (" + a.sort().to_string() +
                                    " vs " + b.sort().to_string() + ")");
  return node(Op::Eq, Sort::boolean(), {a, b});
}

static Expr cmp(Op op, const char* name, const Expr& a, const Expr& b) {
  require_all({a, b}, Sort::integer(), name);
  return node(op, Sort::boolean(), {a, b});
}

Expr lt(const Expr& a, const Expr& b) { return cmp(Op::Lt, "<", a, b); }
Expr le(const Expr& a, const Expr& b) { return cmp(Op::Le, "<=", a, b); }
Expr gt(const Expr& a, const Expr& b) { return cmp(Op::Gt, ">", a, b); }
Expr ge(const Expr& a, const Expr& b) { return cmp(Op::Ge, ">=", a, b); }

Expr add(std::vector<Expr> args) {
  require(args.size() >= 2, "+: needs at least two operands");
  require_all(args, Sort::integer(), "+");
  return node(Op::Add, Sort::integer(), std::move(args));
}

Expr sub(std::vector<Expr> args) {
  require(args.size() >= 2, "-: needs at least two operands");
  require_all(args, Sort::integer(), "-");
  return node(Op::Sub, Sort::integer(), std::move(args));
}

Expr neg(const Expr& a) {
  require(a.sort().is_int(), "-: expected Int");
  // keep literals canonical so that printing "(- 5)" parses back equal
  if (a.op() == Op::IntLit && a.int_value() > 0) return int_lit(-a.int_value());
  return node(Op::Neg, Sort::integer(), {a});
}

Expr mul(std::vector<Expr> args) {
  require(args.size() >= 2, "*: needs at least two operands");
  require_all(args, Sort::integer(), "*");
  return node(Op::Mul, Sort::integer(), std::move(args));
}

Expr ite(const Expr& c, const Expr& t, const Expr& e) {
  require(c.sort().is_bool(), "ite: condition must be Bool");
  require(t.sort() == e.sort(), "ite: branch sorts differ");
  return node(Op::Ite, t.sort(), {c, t, e});
}

Expr select(const Expr& a, const Expr& i) {
  require(a.sort().is_array(), "select: expected array");
  require(a.sort().index() == i.sort(), "select: index sort mismatch");
  return node(Op::Select, a.sort().element(), {a, i});
}

Expr store(const Expr& a, const Expr& i, const Expr& v) {
  require(a.sort().is_array(), "store: expected array");
  require(a.sort().index() == i.sort(), "store: index sort mismatch");
  require(a.sort().element() == v.sort(), "store: element sort mismatch");
  return node(Op::Store, a.sort(), {a, i, v});
}

static Expr quant(Op op, std::vector<Var> vars, const Expr& body, bool hoistable) {
  require(body.sort().is_bool(), "quantifier body must be Bool");
  ExprNode n;
  n.op = op;
  n.sort = Sort::boolean();
  n.args = {body};
  n.bound = std::move(vars);
  n.hoistable = hoistable;
  return make_node(std::move(n));
}

Expr forall_(std::vector<Var> vars, const Expr& body) {
  return quant(Op::Forall, std::move(vars), body, false);
}

Expr exists_(std::vector<Var> vars, const Expr& body, bool hoistable) {
  return quant(Op::Exists, std::move(vars), body, hoistable);
}

Expr apply_pred(const std::string& pred, std::vector<Expr> args) {
  ExprNode n;
  n.op = Op::Apply;
  n.sort = Sort::boolean();
  n.pred = pred;
  n.args = std::move(args);
  return make_node(std::move(n));
}

Expr conj(const std::vector<Expr>& args) {
  std::vector<Expr> out;
  for (const auto& a : args) {
    if (a.is_true()) continue;
    if (a.is_false()) return false_expr();
    if (a.op() == Op::And) {
      for (const auto& b : a.args()) out.push_back(b);
    } else {
      out.push_back(a);
    }
  }
  if (out.empty()) return true_expr();
  if (out.size() == 1) return out[0];
  return and_(std::move(out));
}

Expr disj(const std::vector<Expr>& args) {
  std::vector<Expr> out;
  for (const auto& a : args) {
    if (a.is_false()) continue;
    if (a.is_true()) return true_expr();
    if (a.op() == Op::Or) {
      for (const auto& b : a.args()) out.push_back(b);
    } else {
      out.push_back(a);
    }
  }
  if (out.empty()) return false_expr();
  if (out.size() == 1) return out[0];
  return or_(std::move(out));
}

Expr negate(const Expr& a) {
  if (a.op() == Op::BoolLit) return bool_lit(!a.bool_value());
  if (a.op() == Op::Not) return a.arg(0);
  return not_(a);
}

Expr equal_vocab(const Vocabulary& a, const Vocabulary& b) {
  if (a.size() != b.size()) throw SortError("equal_vocab: size mismatch");
  std::vector<Expr> parts;
  for (size_t i = 0; i < a.size(); ++i) parts.push_back(eq(var_expr(a[i]), var_expr(b[i])));
  return conj(parts);
}

// ---- traversal helpers

namespace {

Expr rebuild(const Expr& e, std::vector<Expr> args) {
  switch (e.op()) {
    case Op::Not:
      return not_(args[0]);
    case Op::And:
      return and_(std::move(args));
    case Op::Or:
      return or_(std::move(args));
    case Op::Implies:
      return implies(args[0], args[1]);
    case Op::Eq:
      return eq(args[0], args[1]);
    case Op::Lt:
      return lt(args[0], args[1]);
    case Op::Le:
      return le(args[0], args[1]);
    case Op::Gt:
      return gt(args[0], args[1]);
    case Op::Ge:
      return ge(args[0], args[1]);
    case Op::Add:
      return add(std::move(args));
    case Op::Sub:
      return sub(std::move(args));
    case Op::Neg:
      return neg(args[0]);
    case Op::Mul:
      return mul(std::move(args));
    case Op::Ite:
      return ite(args[0], args[1], args[2]);
    case Op::Select:
      return select(args[0], args[1]);
    case Op::Store:
      return store(args[0], args[1], args[2]);
    case Op::Apply:
      return apply_pred(e.predicate(), std::move(args));
    default:
      throw Error("rebuild: unexpected node");
  }
}

void collect_free(const Expr& e, std::vector<Var>& bound, std::vector<Var>& out,
                  std::set<Var>& seen) {
  switch (e.op()) {
    case Op::IntLit:
    case Op::BoolLit:
      return;
    case Op::Variable: {
      const Var& v = e.var();
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
      if (seen.insert(v).second) out.push_back(v);
      return;
    }
    case Op::Forall:
    case Op::Exists: {
      size_t mark = bound.size();
      for (const auto& v : e.bound()) bound.push_back(v);
      collect_free(e.body(), bound, out, seen);
      bound.resize(mark);
      return;
    }
    default:
      for (const auto& a : e.args()) collect_free(a, bound, out, seen);
  }
}

void collect_all_vars(const Expr& e, std::vector<Var>& out) {
  if (e.op() == Op::Variable) out.push_back(e.var());
  if (e.is_quantifier())
    for (const auto& v : e.bound()) out.push_back(v);
  for (const auto& a : e.args()) collect_all_vars(a, out);
}

}  // namespace

Expr with_args(const Expr& e, std::vector<Expr> args) { return rebuild(e, std::move(args)); }

Vocabulary free_vars(const Expr& f) {
  std::vector<Var> bound, out;
  std::set<Var> seen;
  collect_free(f, bound, out, seen);
  return Vocabulary(out);
}

bool occurs_free(const Var& v, const Expr& f) { return free_vars(f).contains(v); }

bool contains_quantifier(const Expr& f) {
  if (f.is_quantifier()) return true;
  for (const auto& a : f.args())
    if (contains_quantifier(a)) return true;
  return false;
}

bool contains_apply(const Expr& f) {
  if (f.op() == Op::Apply) return true;
  for (const auto& a : f.args())
    if (contains_apply(a)) return true;
  return false;
}

std::vector<std::string> applied_predicates(const Expr& f) {
  std::vector<std::string> out;
  std::function<void(const Expr&)> go = [&](const Expr& e) {
    if (e.op() == Op::Apply &&
        std::find(out.begin(), out.end(), e.predicate()) == out.end())
      out.push_back(e.predicate());
    for (const auto& a : e.args()) go(a);
  };
  go(f);
  return out;
}

std::string fresh_name(const std::string& base, const std::vector<Var>& taken) {
  auto used = [&](const std::string& n) {
    return std::any_of(taken.begin(), taken.end(),
                       [&](const Var& v) { return v.name == n; });
  };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "!" + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

Expr substitute(const Expr& f, const Substitution& m) {
  for (const auto& [v, t] : m)
    if (!(v.sort == t.sort()))
      throw SortError("substitution for " + v.spelling() + " changes sort " +
                      v.sort.to_string() + " -> " + t.sort().to_string());
  if (m.empty()) return f;
  switch (f.op()) {
    case Op::IntLit:
    case Op::BoolLit:
      return f;
    case Op::Variable: {
      auto it = m.find(f.var());
      return it == m.end() ? f : it->second;
    }
    case Op::Forall:
    case Op::Exists: {
      Substitution inner = m;
      for (const auto& b : f.bound()) inner.erase(b);
      // variables that the replacement terms would bring into scope
      std::vector<Var> incoming;
      Vocabulary body_free = free_vars(f.body());
      for (const auto& [v, t] : inner) {
        if (!body_free.contains(v)) continue;
        for (const auto& w : free_vars(t)) incoming.push_back(w);
      }
      std::vector<Var> new_bound;
      std::vector<Var> taken = incoming;
      for (const auto& v : body_free) taken.push_back(v);
      for (const auto& b : f.bound()) taken.push_back(b);
      for (const auto& b : f.bound()) {
        if (std::find(incoming.begin(), incoming.end(), b) != incoming.end()) {
          Var r(fresh_name(b.name, taken), b.sort, b.copy, b.primed);
          taken.push_back(r);
          inner[b] = var_expr(r);
          new_bound.push_back(r);
        } else {
          new_bound.push_back(b);
        }
      }
      Expr body = substitute(f.body(), inner);
      if (f.op() == Op::Forall) return forall_(new_bound, body);
      return exists_(new_bound, body, f.hoistable());
    }
    default: {
      std::vector<Expr> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute(a, m));
      return rebuild(f, std::move(args));
    }
  }
}

static Expr map_all_vars(const Expr& f, const std::function<Var(const Var&)>& fn) {
  switch (f.op()) {
    case Op::IntLit:
    case Op::BoolLit:
      return f;
    case Op::Variable:
      return var_expr(fn(f.var()));
    case Op::Forall:
    case Op::Exists: {
      std::vector<Var> bound;
      for (const auto& b : f.bound()) bound.push_back(fn(b));
      Expr body = map_all_vars(f.body(), fn);
      if (f.op() == Op::Forall) return forall_(bound, body);
      return exists_(bound, body, f.hoistable());
    }
    default: {
      std::vector<Expr> args;
      for (const auto& a : f.args()) args.push_back(map_all_vars(a, fn));
      return rebuild(f, std::move(args));
    }
  }
}

Expr rename_copy(const Expr& f, int i) {
  if (i < 1) throw Error("rename_copy: copy index must be positive");
  std::vector<Var> all;
  collect_all_vars(f, all);
  for (const auto& v : all)
    if (v.copy != 0)
      throw Error("rename_copy: formula already carries copy index (" + v.spelling() + ")");
  return map_all_vars(f, [i](const Var& v) { return v.with_copy(i); });
}

Expr prime_free(const Expr& f) {
  Substitution m;
  for (const auto& v : free_vars(f)) {
    if (v.primed) throw Error("prime_free: variable already primed: " + v.spelling());
    m[v] = var_expr(v.prime());
  }
  return substitute(f, m);
}

Expr normalize_bound(const Expr& f) {
  int counter = 0;
  std::function<Expr(const Expr&)> go = [&](const Expr& e) -> Expr {
    if (e.is_quantifier()) {
      Substitution m;
      std::vector<Var> nb;
      for (const auto& b : e.bound()) {
        Var r("_b" + std::to_string(counter++), b.sort);
        m[b] = var_expr(r);
        nb.push_back(r);
      }
      Expr body = go(substitute(e.body(), m));
      return e.op() == Op::Forall ? forall_(nb, body) : exists_(nb, body, e.hoistable());
    }
    if (e.args().empty()) return e;
    std::vector<Expr> args;
    for (const auto& a : e.args()) args.push_back(go(a));
    return rebuild(e, std::move(args));
  };
  return go(f);
}

}  // namespace hyperhorn
