#include "hyperhorn/eval.hpp"

#include "hyperhorn/formula_io.hpp"

namespace hyperhorn {

Value Value::integer(int64_t v) {
  Value x;
  x.kind = Kind::Int;
  x.i = v;
  return x;
}

Value Value::boolean(bool v) {
  Value x;
  x.kind = Kind::Bool;
  x.b = v;
  return x;
}

Value Value::array(int64_t lo, std::vector<int64_t> elems) {
  Value x;
  x.kind = Kind::Array;
  x.lo = lo;
  x.elems = std::move(elems);
  return x;
}

std::string Value::to_string() const {
  switch (kind) {
    case Kind::Int:
      return std::to_string(i);
    case Kind::Bool:
      return b ? "true" : "false";
    case Kind::Array: {
      std::string s = "[";
      for (size_t j = 0; j < elems.size(); ++j) s += (j ? " " : "") + std::to_string(elems[j]);
      return s + "]@" + std::to_string(lo);
    }
  }
  return "?";
}

void Assignment::set(const Var& v, Value x) {
  for (auto& [k, val] : entries_)
    if (k == v) {
      val = std::move(x);
      return;
    }
  entries_.emplace_back(v, std::move(x));
}

const Value* Assignment::get(const Var& v) const {
  for (const auto& [k, val] : entries_)
    if (k == v) return &val;
  return nullptr;
}

namespace {

int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw EvalError("integer overflow during evaluation");
  return static_cast<int64_t>(v);
}

class Evaluator {
 public:
  Evaluator(const Assignment& env, const QuantifierDomain& domain) : env_(env), domain_(domain) {}

  Value eval(const Expr& e) {
    switch (e.op()) {
      case Op::IntLit:
        return Value::integer(checked(e.int_value()));
      case Op::BoolLit:
        return Value::boolean(e.bool_value());
      case Op::Variable: {
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
          if (it->first == e.var()) return it->second;
        if (const Value* v = env_.get(e.var())) return *v;
        throw EvalError("no value for " + e.var().spelling());
      }
      case Op::Not:
        return Value::boolean(!truth(e.arg(0)));
      case Op::And:
        for (const auto& a : e.args())
          if (!truth(a)) return Value::boolean(false);
        return Value::boolean(true);
      case Op::Or:
        for (const auto& a : e.args())
          if (truth(a)) return Value::boolean(true);
        return Value::boolean(false);
      case Op::Implies:
        return Value::boolean(!truth(e.arg(0)) || truth(e.arg(1)));
      case Op::Eq:
        return Value::boolean(eval(e.arg(0)) == eval(e.arg(1)));
      case Op::Lt:
        return Value::boolean(num(e.arg(0)) < num(e.arg(1)));
      case Op::Le:
        return Value::boolean(num(e.arg(0)) <= num(e.arg(1)));
      case Op::Gt:
        return Value::boolean(num(e.arg(0)) > num(e.arg(1)));
      case Op::Ge:
        return Value::boolean(num(e.arg(0)) >= num(e.arg(1)));
      case Op::Add: {
        __int128 s = 0;
        for (const auto& a : e.args()) s += num(a);
        return Value::integer(checked(s));
      }
      case Op::Sub: {
        __int128 s = num(e.arg(0));
        for (size_t i = 1; i < e.args().size(); ++i) s -= num(e.arg(i));
        return Value::integer(checked(s));
      }
      case Op::Neg:
        return Value::integer(checked(-static_cast<__int128>(num(e.arg(0)))));
      case Op::Mul: {
        __int128 s = 1;
        for (const auto& a : e.args()) s = checked(s * num(a));
        return Value::integer(checked(s));
      }
      case Op::Ite:
        return truth(e.arg(0)) ? eval(e.arg(1)) : eval(e.arg(2));
      case Op::Select: {
        Value a = eval(e.arg(0));
        int64_t i = num(e.arg(1));
        if (i < a.lo || i >= a.lo + static_cast<int64_t>(a.elems.size()))
          throw EvalError("array read at " + std::to_string(i) + " outside the bounded range");
        int64_t x = a.elems[static_cast<size_t>(i - a.lo)];
        return e.sort().is_bool() ? Value::boolean(x != 0) : Value::integer(x);
      }
      case Op::Store: {
        Value a = eval(e.arg(0));
        int64_t i = num(e.arg(1));
        Value x = eval(e.arg(2));
        if (i < a.lo || i >= a.lo + static_cast<int64_t>(a.elems.size()))
          throw EvalError("array write at " + std::to_string(i) + " outside the bounded range");
        a.elems[static_cast<size_t>(i - a.lo)] = x.kind == Value::Kind::Bool ? (x.b ? 1 : 0) : x.i;
        return a;
      }
      case Op::Forall:
      case Op::Exists:
        return Value::boolean(quantifier(e, 0));
      case Op::Apply:
        throw EvalError("cannot evaluate unknown predicate " + e.predicate());
    }
    throw EvalError("unsupported operator");
  }

 private:
  bool truth(const Expr& e) {
    Value v = eval(e);
    if (v.kind != Value::Kind::Bool) throw EvalError("expected a Bool value");
    return v.b;
  }

  int64_t num(const Expr& e) {
    Value v = eval(e);
    if (v.kind != Value::Kind::Int) throw EvalError("expected an Int value");
    return v.i;
  }

  bool quantifier(const Expr& q, size_t at) {
    bool forall = q.op() == Op::Forall;
    if (at == q.bound().size()) return truth(q.body());
    const Var& x = q.bound()[at];
    std::optional<std::vector<Value>> values;
    if (x.sort.is_bool()) values = std::vector<Value>{Value::boolean(false), Value::boolean(true)};
    else if (domain_) values = domain_(x);
    if (!values) throw EvalError("no finite domain for quantified " + x.spelling());
    for (const auto& v : *values) {
      bound_.emplace_back(x, v);
      bool r = quantifier(q, at + 1);
      bound_.pop_back();
      if (forall && !r) return false;
      if (!forall && r) return true;
    }
    return forall;
  }

  const Assignment& env_;
  const QuantifierDomain& domain_;
  std::vector<std::pair<Var, Value>> bound_;
};

}  // namespace

Value evaluate(const Expr& e, const Assignment& env, const QuantifierDomain& domain) {
  Evaluator ev(env, domain);
  return ev.eval(e);
}

bool holds(const Expr& f, const Assignment& env, const QuantifierDomain& domain) {
  Value v = evaluate(f, env, domain);
  if (v.kind != Value::Kind::Bool) throw EvalError("formula did not evaluate to a Bool");
  return v.b;
}

Expr value_expr(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Int:
      return int_lit(v.i);
    case Value::Kind::Bool:
      return bool_lit(v.b);
    case Value::Kind::Array:
      break;
  }
  throw Error("array values have no literal form");
}

Value literal_value(const Expr& lit) {
  if (lit.op() == Op::IntLit) return Value::integer(checked(lit.int_value()));
  if (lit.op() == Op::BoolLit) return Value::boolean(lit.bool_value());
  if (lit.op() == Op::Neg && lit.arg(0).op() == Op::IntLit)
    return Value::integer(checked(-lit.arg(0).int_value()));
  throw Error("not a literal: " + print_formula(lit));
}

}  // namespace hyperhorn
