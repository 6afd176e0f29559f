#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperhorn/formula.hpp"

namespace hyperhorn {

// Concrete values of the bounded semantics. Arrays are dense over
// [lo, lo + size) with Int or Bool (0/1) elements.
struct Value {
  enum class Kind { Int, Bool, Array };
  Kind kind = Kind::Int;
  int64_t i = 0;
  bool b = false;
  int64_t lo = 0;
  std::vector<int64_t> elems;

  static Value integer(int64_t v);
  static Value boolean(bool v);
  static Value array(int64_t lo, std::vector<int64_t> elems);

  std::string to_string() const;
  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;
};

// Raised when a term leaves the bounded semantics (array index outside the
// stored range, arithmetic overflow, quantifier without a domain).
class EvalError : public Error {
 public:
  using Error::Error;
};

class Assignment {
 public:
  void set(const Var& v, Value x);
  const Value* get(const Var& v) const;
  const std::vector<std::pair<Var, Value>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<Var, Value>> entries_;
};

// Values a bound variable ranges over when a quantifier is evaluated.
using QuantifierDomain = std::function<std::optional<std::vector<Value>>(const Var&)>;

Value evaluate(const Expr& e, const Assignment& env, const QuantifierDomain& domain = {});
bool holds(const Expr& f, const Assignment& env, const QuantifierDomain& domain = {});

// Literal constant for a value (arrays are not expressible).
Expr value_expr(const Value& v);
Value literal_value(const Expr& lit);

}  // namespace hyperhorn
