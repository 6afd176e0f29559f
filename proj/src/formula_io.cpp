#include "hyperhorn/formula_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hyperhorn {

ParseError::ParseError(const std::string& msg, int line, int col)
    : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

bool SExpr::is(std::string_view head) const {
  return is_list() && !items.empty() && items[0].is_atom && !items[0].quoted &&
         items[0].text == head;
}

std::string SExpr::to_string() const {
  if (is_atom) return quoted ? "|" + text + "|" : text;
  std::string s = "(";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += " ";
    s += items[i].to_string();
  }
  return s + ")";
}

void parse_fail(const SExpr& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

// ---- reader

namespace {

class Reader {
 public:
  explicit Reader(std::string_view t) : text_(t) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
    SExpr s;
    s.line = line_;
    s.col = col_;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      s.is_atom = false;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", s.line, s.col);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        s.items.push_back(read());
      }
      return s;
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '|') {
      advance();
      size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '|') advance();
      if (pos_ >= text_.size()) throw ParseError("unterminated |symbol|", s.line, s.col);
      s.text = std::string(text_.substr(start, pos_ - start));
      s.quoted = true;
      advance();
      return s;
    }
    if (c == '"') {
      advance();
      size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') advance();
      if (pos_ >= text_.size()) throw ParseError("unterminated string", s.line, s.col);
      s.text = "\"" + std::string(text_.substr(start, pos_ - start)) + "\"";
      advance();
      return s;
    }
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      advance();
    }
    s.text = std::string(text_.substr(start, pos_ - start));
    return s;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.size() != 1)
    throw ParseError("expected exactly one s-expression, found " + std::to_string(all.size()), 1,
                     1);
  return all[0];
}

// ---- sorts and spellings

Sort parse_sort(const SExpr& s) {
  if (s.is_atom) {
    if (s.text == "Int") return Sort::integer();
    if (s.text == "Bool") return Sort::boolean();
    parse_fail(s, "unknown sort '" + s.text + "'");
  }
  if (s.is("Array") && s.items.size() == 3)
    return Sort::array(parse_sort(s.items[1]), parse_sort(s.items[2]));
  parse_fail(s, "malformed sort " + s.to_string());
}

Var parse_spelling(const std::string& spelling) {
  std::string t = spelling;
  bool primed = false;
  if (!t.empty() && t.back() == '\'') {
    primed = true;
    t.pop_back();
  }
  int copy = 0;
  auto at = t.rfind('@');
  if (at != std::string::npos && at > 0 && at + 1 < t.size()) {
    std::string digits = t.substr(at + 1);
    bool all_digits = true;
    for (char c : digits) all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
    if (all_digits) {
      copy = std::stoi(digits);
      t = t.substr(0, at);
    }
  }
  return Var(t, Sort::integer(), copy, primed);
}

// ---- formula parser

namespace {

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
 public:
  Parser(const Vocabulary& vocab, const Signature& unknowns) : vocab_(vocab), unknowns_(unknowns) {}

  Expr term(const SExpr& s) {
    try {
      return term_inner(s);
    } catch (const SortError& e) {
      parse_fail(s, e.what());
    }
  }

 private:
  Expr lookup(const SExpr& s) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == s.text) return it->second;
    Var key = parse_spelling(s.text);
    if (auto v = vocab_.find(key)) return var_expr(*v);
    if (auto it = unknowns_.find(s.text); it != unknowns_.end() && it->second.empty())
      return apply_pred(s.text, {});
    parse_fail(s, "unbound symbol '" + s.text + "'");
  }

  std::vector<Expr> operands(const SExpr& s) {
    std::vector<Expr> out;
    for (size_t i = 1; i < s.items.size(); ++i) out.push_back(term(s.items[i]));
    return out;
  }

  void arity(const SExpr& s, size_t lo, size_t hi) {
    size_t n = s.items.size() - 1;
    if (n < lo || n > hi)
      parse_fail(s, "wrong number of operands for '" + s.items[0].text + "'");
  }

  Expr quantifier(const SExpr& s, bool is_forall) {
    arity(s, 2, 2);
    const SExpr& binders = s.items[1];
    if (!binders.is_list() || binders.items.empty()) parse_fail(binders, "expected binder list");
    std::vector<Var> vars;
    size_t mark = scope_.size();
    for (const auto& b : binders.items) {
      if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_atom)
        parse_fail(b, "malformed binder");
      Var v = parse_spelling(b.items[0].text);
      v.sort = parse_sort(b.items[1]);
      vars.push_back(v);
      scope_.emplace_back(b.items[0].text, var_expr(v));
    }
    Expr body = term(s.items[2]);
    scope_.resize(mark);
    if (!body.sort().is_bool()) parse_fail(s.items[2], "quantifier body must be Bool");
    return is_forall ? forall_(vars, body) : exists_(vars, body);
  }

  Expr let(const SExpr& s) {
    arity(s, 2, 2);
    const SExpr& binds = s.items[1];
    if (!binds.is_list()) parse_fail(binds, "expected let bindings");
    std::vector<std::pair<std::string, Expr>> fresh;
    for (const auto& b : binds.items) {
      if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_atom)
        parse_fail(b, "malformed let binding");
      fresh.emplace_back(b.items[0].text, term(b.items[1]));  // parallel let
    }
    size_t mark = scope_.size();
    for (auto& f : fresh) scope_.push_back(std::move(f));
    Expr body = term(s.items[2]);
    scope_.resize(mark);
    return body;
  }

  Expr term_inner(const SExpr& s) {
    if (s.is_atom) {
      if (!s.quoted) {
        if (is_numeral(s.text)) {
          int64_t v = 0;
          auto [p, ec] = std::from_chars(s.text.data(), s.text.data() + s.text.size(), v);
          if (ec != std::errc()) parse_fail(s, "integer literal out of range");
          return int_lit(v);
        }
        if (s.text == "true") return true_expr();
        if (s.text == "false") return false_expr();
      }
      return lookup(s);
    }
    if (s.items.empty()) parse_fail(s, "empty application");
    const SExpr& head = s.items[0];
    if (!head.is_atom) parse_fail(head, "unsupported application head " + head.to_string());
    const std::string& h = head.text;
    if (!head.quoted) {
      if (h == "and") return and_(operands(s));
      if (h == "or") return or_(operands(s));
      if (h == "not") {
        arity(s, 1, 1);
        return not_(term(s.items[1]));
      }
      if (h == "=>") {
        arity(s, 2, SIZE_MAX);
        auto ops = operands(s);
        Expr r = ops.back();
        for (size_t i = ops.size() - 1; i-- > 0;) r = implies(ops[i], r);
        return r;
      }
      if (h == "=" || h == "distinct") {
        arity(s, 2, SIZE_MAX);
        auto ops = operands(s);
        if (h == "=" && ops.size() == 2) return eq(ops[0], ops[1]);
        std::vector<Expr> parts;
        if (h == "=") {
          for (size_t i = 0; i + 1 < ops.size(); ++i) parts.push_back(eq(ops[i], ops[i + 1]));
        } else {
          for (size_t i = 0; i < ops.size(); ++i)
            for (size_t j = i + 1; j < ops.size(); ++j) parts.push_back(not_(eq(ops[i], ops[j])));
        }
        return parts.size() == 1 ? parts[0] : and_(parts);
      }
      if (h == "<" || h == "<=" || h == ">" || h == ">=") {
        arity(s, 2, 2);
        Expr a = term(s.items[1]), b = term(s.items[2]);
        if (h == "<") return lt(a, b);
        if (h == "<=") return le(a, b);
        if (h == ">") return gt(a, b);
        return ge(a, b);
      }
      if (h == "+") {
        arity(s, 1, SIZE_MAX);
        auto ops = operands(s);
        return ops.size() == 1 ? ops[0] : add(ops);
      }
      if (h == "-") {
        arity(s, 1, SIZE_MAX);
        auto ops = operands(s);
        return ops.size() == 1 ? neg(ops[0]) : sub(ops);
      }
      if (h == "*") {
        arity(s, 2, SIZE_MAX);
        return mul(operands(s));
      }
      if (h == "ite") {
        arity(s, 3, 3);
        auto ops = operands(s);
        return ite(ops[0], ops[1], ops[2]);
      }
      if (h == "select") {
        arity(s, 2, 2);
        auto ops = operands(s);
        return select(ops[0], ops[1]);
      }
      if (h == "store") {
        arity(s, 3, 3);
        auto ops = operands(s);
        return store(ops[0], ops[1], ops[2]);
      }
      if (h == "forall") return quantifier(s, true);
      if (h == "exists") return quantifier(s, false);
      if (h == "let") return let(s);
      if (h == "!") {
        arity(s, 1, SIZE_MAX);
        return term(s.items[1]);
      }
    }
    auto it = unknowns_.find(h);
    if (it == unknowns_.end()) parse_fail(head, "unknown function symbol '" + h + "'");
    auto ops = operands(s);
    if (ops.size() != it->second.size())
      parse_fail(s, "arity mismatch for '" + h + "': expected " +
                        std::to_string(it->second.size()) + ", got " + std::to_string(ops.size()));
    for (size_t i = 0; i < ops.size(); ++i)
      if (!(ops[i].sort() == it->second[i]))
        parse_fail(s.items[i + 1], "sort mismatch in argument " + std::to_string(i + 1) +
                                       " of '" + h + "'");
    return apply_pred(h, ops);
  }

  const Vocabulary& vocab_;
  const Signature& unknowns_;
  std::vector<std::pair<std::string, Expr>> scope_;
};

}  // namespace

Expr parse_term(const SExpr& s, const Vocabulary& vocab, const Signature& unknowns) {
  Parser p(vocab, unknowns);
  return p.term(s);
}

Expr parse_formula(const SExpr& s, const Vocabulary& vocab, const Signature& unknowns) {
  Expr e = parse_term(s, vocab, unknowns);
  if (!e.sort().is_bool()) parse_fail(s, "expected a Bool formula, got " + e.sort().to_string());
  return e;
}

Expr parse_formula(std::string_view text, const Vocabulary& vocab, const Signature& unknowns) {
  return parse_formula(read_sexpr(text), vocab, unknowns);
}

// ---- printer

std::string smt_symbol(const std::string& s) {
  static const std::string extra = "~!@$%^&*_-+=<>.?/";
  bool simple = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '@';
  for (char c : s)
    simple = simple && (std::isalnum(static_cast<unsigned char>(c)) || extra.find(c) != std::string::npos);
  static const char* reserved[] = {"and", "or", "not", "=>", "=", "ite", "let", "forall", "exists",
                                   "true", "false", "select", "store", "distinct", "_", "!", "as"};
  for (const char* r : reserved) simple = simple && s != r;
  return simple ? s : "|" + s + "|";
}

std::string print_var(const Var& v, SymbolStyle style) {
  return style == SymbolStyle::SmtLib ? smt_symbol(v.spelling()) : v.spelling();
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Not: return "not";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Implies: return "=>";
    case Op::Eq: return "=";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Neg: return "-";
    case Op::Mul: return "*";
    case Op::Ite: return "ite";
    case Op::Select: return "select";
    case Op::Store: return "store";
    case Op::Forall: return "forall";
    case Op::Exists: return "exists";
    default: return "?";
  }
}

void print_to(std::ostream& os, const Expr& e, SymbolStyle style) {
  switch (e.op()) {
    case Op::IntLit:
      if (e.int_value() < 0)
        os << "(- " << (0ULL - static_cast<uint64_t>(e.int_value())) << ")";
      else
        os << e.int_value();
      return;
    case Op::BoolLit:
      os << (e.bool_value() ? "true" : "false");
      return;
    case Op::Variable:
      os << print_var(e.var(), style);
      return;
    case Op::Forall:
    case Op::Exists:
      os << "(" << op_name(e.op()) << " (";
      for (size_t i = 0; i < e.bound().size(); ++i) {
        if (i) os << " ";
        os << "(" << print_var(e.bound()[i], style) << " " << e.bound()[i].sort.to_string() << ")";
      }
      os << ") ";
      print_to(os, e.body(), style);
      os << ")";
      return;
    case Op::Apply:
      if (e.args().empty()) {
        os << (style == SymbolStyle::SmtLib ? smt_symbol(e.predicate()) : e.predicate());
        return;
      }
      os << "(" << (style == SymbolStyle::SmtLib ? smt_symbol(e.predicate()) : e.predicate());
      for (const auto& a : e.args()) {
        os << " ";
        print_to(os, a, style);
      }
      os << ")";
      return;
    case Op::And:
    case Op::Or:
      if (e.args().empty() && style == SymbolStyle::SmtLib) {
        os << (e.op() == Op::And ? "true" : "false");
        return;
      }
      if (e.args().size() == 1 && style == SymbolStyle::SmtLib) {
        print_to(os, e.arg(0), style);
        return;
      }
      [[fallthrough]];
    default:
      os << "(" << op_name(e.op());
      for (const auto& a : e.args()) {
        os << " ";
        print_to(os, a, style);
      }
      os << ")";
  }
}

}  // namespace

std::string print_formula(const Expr& f, SymbolStyle style) {
  std::ostringstream os;
  print_to(os, f, style);
  return os.str();
}

}  // namespace hyperhorn
