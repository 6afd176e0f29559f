#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperhorn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when sorts of operands or substitution entries disagree.
class SortError : public Error {
 public:
  using Error::Error;
};

class Sort {
 public:
  enum class Kind { Int, Bool, Array };

  static Sort integer();
  static Sort boolean();
  static Sort array(const Sort& index, const Sort& element);

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_bool() const { return kind_ == Kind::Bool; }
  bool is_array() const { return kind_ == Kind::Array; }
  const Sort& index() const;
  const Sort& element() const;

  std::string to_string() const;

  friend bool operator==(const Sort& a, const Sort& b);
  friend std::strong_ordering operator<=>(const Sort& a, const Sort& b);

 private:
  Sort() = default;
  Kind kind_ = Kind::Int;
  std::shared_ptr<const std::pair<Sort, Sort>> arr_;
};

// A variable is identified by (name, copy, primed). copy 0 means "no copy".
struct Var {
  std::string name;
  Sort sort = Sort::integer();
  int copy = 0;
  bool primed = false;

  Var() = default;
  Var(std::string n, Sort s, int c = 0, bool p = false)
      : name(std::move(n)), sort(std::move(s)), copy(c), primed(p) {}

  Var with_copy(int i) const { return Var(name, sort, i, primed); }
  Var prime() const { return Var(name, sort, copy, true); }
  Var unprime() const { return Var(name, sort, copy, false); }

  // textual spelling: name[@copy][']
  std::string spelling() const;

  friend bool operator==(const Var& a, const Var& b) {
    return a.name == b.name && a.copy == b.copy && a.primed == b.primed;
  }
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    if (auto c = a.copy <=> b.copy; c != 0) return c;
    return a.primed <=> b.primed;
  }
};

// Ordered list of distinct variables; order defines predicate argument order.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::initializer_list<Var> vs);
  explicit Vocabulary(const std::vector<Var>& vs);

  void add(const Var& v);  // throws on duplicates
  void add_all(const Vocabulary& other);
  bool contains(const Var& v) const;
  std::optional<Var> find(const Var& v) const;

  const std::vector<Var>& vars() const { return vars_; }
  size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  const Var& operator[](size_t i) const { return vars_[i]; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  Vocabulary primed() const;
  Vocabulary with_copy(int i) const;
  std::vector<Sort> sorts() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<Var> vars_;
};

Vocabulary concat(const Vocabulary& a, const Vocabulary& b);

enum class Op {
  IntLit,
  BoolLit,
  Variable,
  Not,
  And,
  Or,
  Implies,
  Eq,
  Lt,
  Le,
  Gt,
  Ge,
  Add,
  Sub,
  Neg,
  Mul,
  Ite,
  Select,
  Store,
  Forall,
  Exists,
  Apply,  // unknown predicate application
};

struct ExprNode;

// Immutable shared expression tree.
class Expr {
 public:
  Expr() = default;

  Op op() const;
  const Sort& sort() const;
  int64_t int_value() const;
  bool bool_value() const;
  const Var& var() const;
  const std::vector<Expr>& args() const;
  const Expr& arg(size_t i) const { return args()[i]; }
  const std::vector<Var>& bound() const;
  const Expr& body() const { return args()[0]; }
  bool hoistable() const;
  const std::string& predicate() const;

  bool is_true() const;
  bool is_false() const;
  bool is_quantifier() const { return op() == Op::Forall || op() == Op::Exists; }
  bool valid() const { return static_cast<bool>(node_); }

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator<(const Expr& a, const Expr& b);

 private:
  friend Expr make_node(ExprNode n);
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  Op op = Op::BoolLit;
  Sort sort = Sort::boolean();
  int64_t ival = 0;
  Var var;
  std::vector<Expr> args;
  std::vector<Var> bound;
  bool hoistable = false;
  std::string pred;
};

// builders; all check sorts and throw SortError
Expr int_lit(int64_t v);
Expr bool_lit(bool b);
Expr true_expr();
Expr false_expr();
Expr var_expr(const Var& v);
Expr not_(const Expr& a);
Expr and_(std::vector<Expr> args);
Expr or_(std::vector<Expr> args);
Expr implies(const Expr& a, const Expr& b);
Expr eq(const Expr& a, const Expr& b);
Expr lt(const Expr& a, const Expr& b);
Expr le(const Expr& a, const Expr& b);
Expr gt(const Expr& a, const Expr& b);
Expr ge(const Expr& a, const Expr& b);
Expr add(std::vector<Expr> args);
Expr sub(std::vector<Expr> args);
Expr neg(const Expr& a);
Expr mul(std::vector<Expr> args);
Expr ite(const Expr& c, const Expr& t, const Expr& e);
Expr select(const Expr& a, const Expr& i);
Expr store(const Expr& a, const Expr& i, const Expr& v);
Expr forall_(std::vector<Var> vars, const Expr& body);
Expr exists_(std::vector<Var> vars, const Expr& body, bool hoistable = false);
Expr apply_pred(const std::string& pred, std::vector<Expr> args);

// Same operator as e (not a leaf or quantifier) with new operands.
Expr with_args(const Expr& e, std::vector<Expr> args);

// Folding variants: drop neutral elements, absorb constants, flatten.
Expr conj(const std::vector<Expr>& args);
Expr disj(const std::vector<Expr>& args);
Expr negate(const Expr& a);
Expr equal_vocab(const Vocabulary& a, const Vocabulary& b);  // a_i = b_i

using Substitution = std::map<Var, Expr>;

// Simultaneous, capture-avoiding substitution of free variables.
Expr substitute(const Expr& f, const Substitution& m);
// Rename every variable (free and bound) to copy i. f must be copy-free.
Expr rename_copy(const Expr& f, int i);
// Prime every free variable.
Expr prime_free(const Expr& f);

Vocabulary free_vars(const Expr& f);
bool contains_quantifier(const Expr& f);
bool contains_apply(const Expr& f);
bool occurs_free(const Var& v, const Expr& f);
std::vector<std::string> applied_predicates(const Expr& f);

// Replace bound variable names by canonical ones (for comparisons).
Expr normalize_bound(const Expr& f);

// A name based on base that is not taken by any var in `taken`.
std::string fresh_name(const std::string& base, const std::vector<Var>& taken);

}  // namespace hyperhorn
