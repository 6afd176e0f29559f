#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperhorn/formula.hpp"

namespace hyperhorn {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct SExpr {
  bool is_atom = true;
  std::string text;  // atom text (pipes stripped for quoted symbols)
  bool quoted = false;
  std::vector<SExpr> items;
  int line = 1;
  int col = 1;

  bool is_list() const { return !is_atom; }
  bool is(std::string_view head) const;  // list whose first item is atom head
  std::string to_string() const;
};

// Reads every top-level s-expression; ';' starts a comment.
std::vector<SExpr> read_sexprs(std::string_view text);
SExpr read_sexpr(std::string_view text);  // exactly one

[[noreturn]] void parse_fail(const SExpr& at, const std::string& msg);

// name -> argument sorts of an unknown predicate
using Signature = std::map<std::string, std::vector<Sort>>;

Sort parse_sort(const SExpr& s);
// Splits "a@2'" into name/copy/primed; sort left as Int.
Var parse_spelling(const std::string& spelling);

Expr parse_formula(std::string_view text, const Vocabulary& vocab,
                   const Signature& unknowns = {});
Expr parse_formula(const SExpr& s, const Vocabulary& vocab,
                   const Signature& unknowns = {});
// Parses a term of any sort (used for label constants).
Expr parse_term(const SExpr& s, const Vocabulary& vocab,
                const Signature& unknowns = {});

enum class SymbolStyle { Native, SmtLib };

std::string print_formula(const Expr& f, SymbolStyle style = SymbolStyle::Native);
std::string print_var(const Var& v, SymbolStyle style);
std::string smt_symbol(const std::string& s);

}  // namespace hyperhorn
