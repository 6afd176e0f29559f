#include "hyperhorn/solver.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperhorn/process.hpp"
#include "hyperhorn/simplify.hpp"

namespace hyperhorn {

namespace fs = std::filesystem;

SolverConfig SolverConfig::from_env() {
  SolverConfig c;
  if (const char* s = std::getenv("HYPERHORN_SOLVER"); s && *s) c.executable = s;
  return c;
}

std::string outcome_name(SolverOutcome::Kind k) {
  switch (k) {
    case SolverOutcome::Kind::Sat:
      return "sat";
    case SolverOutcome::Kind::Unsat:
      return "unsat";
    case SolverOutcome::Kind::Unknown:
      return "unknown";
    case SolverOutcome::Kind::Timeout:
      return "timeout";
  }
  return "?";
}

std::string validity_name(ValidityResult::Kind k) {
  switch (k) {
    case ValidityResult::Kind::Valid:
      return "valid";
    case ValidityResult::Kind::Invalid:
      return "invalid";
    case ValidityResult::Kind::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

std::string binders(const std::vector<Var>& vars) {
  std::string s = "(";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) s += " ";
    s += "(" + print_var(vars[i], SymbolStyle::SmtLib) + " " + vars[i].sort.to_string() + ")";
  }
  return s + ")";
}

std::string sort_list(const std::vector<Sort>& sorts) {
  std::string s = "(";
  for (size_t i = 0; i < sorts.size(); ++i) s += (i ? " " : "") + sorts[i].to_string();
  return s + ")";
}

std::string emit_clause(const HornClause& c) {
  std::vector<Var> universals = c.universals.vars();
  Hoisted h = hoist_existentials(push_negations(c.constraint), universals);
  universals.insert(universals.end(), h.vars.begin(), h.vars.end());
  std::vector<Expr> parts;
  for (const auto& b : c.body) parts.push_back(b.to_expr());
  if (!h.body.is_true() || parts.empty()) parts.push_back(h.body);
  Expr lhs = parts.size() == 1 ? parts[0] : and_(parts);
  Expr rhs = c.head ? c.head->to_expr() : false_expr();
  std::string imp = "(=> " + print_formula(lhs, SymbolStyle::SmtLib) + " " +
                    print_formula(rhs, SymbolStyle::SmtLib) + ")";
  // keep only universals that occur
  std::vector<Var> used;
  Vocabulary fv = free_vars(implies(lhs, rhs));
  for (const auto& v : universals)
    if (fv.contains(v)) used.push_back(v);
  if (used.empty()) return imp;
  return "(forall " + binders(used) + "\n  " + imp + ")";
}

std::string temp_path(const std::string& dir, const std::string& ext) {
  static std::atomic<unsigned> counter{0};
  fs::path base = dir.empty() ? fs::temp_directory_path() : fs::path(dir);
  fs::create_directories(base);
  return (base / ("hyperhorn-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)) + ext))
      .string();
}

struct Run {
  ProcessResult proc;
  std::string transcript;
};

Run run_solver(const std::string& text, const SolverConfig& config) {
  if (!(config.timeout_seconds > 0)) throw Error("solver timeout must be positive");
  std::string path = temp_path(config.work_dir, ".smt2");
  {
    std::ofstream out(path);
    if (!out) throw Error("cannot write solver input " + path);
    out << text;
  }
  std::vector<std::string> argv{config.executable};
  argv.insert(argv.end(), config.extra_args.begin(), config.extra_args.end());
  argv.push_back(path);
  Run r;
  r.proc = run_process(argv, config.timeout_seconds);
  std::error_code ec;
  fs::remove(path, ec);
  std::ostringstream t;
  t << "$";
  for (const auto& a : argv) t << " " << a;
  t << "\n; exit " << r.proc.exit_code << (r.proc.timed_out ? " (timeout)" : "") << ", "
    << r.proc.seconds << " s\n; stdout\n"
    << r.proc.out << "; stderr\n"
    << r.proc.err;
  r.transcript = t.str();
  return r;
}

// first non-empty line of solver output
std::string first_answer(const std::string& out, size_t& rest) {
  size_t pos = 0;
  while (pos < out.size()) {
    size_t nl = out.find('\n', pos);
    if (nl == std::string::npos) nl = out.size();
    std::string line = out.substr(pos, nl - pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    pos = nl + 1;
    if (start == std::string::npos) continue;
    rest = std::min(pos, out.size());
    return line.substr(start);
  }
  rest = out.size();
  return "";
}

void collect_defs(const SExpr& s, std::vector<const SExpr*>& defs) {
  if (s.is_atom) return;
  if (s.is("define-fun")) {
    defs.push_back(&s);
    return;
  }
  size_t from = s.is("model") ? 1 : 0;
  for (size_t i = from; i < s.items.size(); ++i) {
    if (s.items[i].is_atom) parse_fail(s.items[i], "unexpected '" + s.items[i].text + "' in model");
    collect_defs(s.items[i], defs);
  }
}

}  // namespace

std::string emit_horn_text(const HornSystem& horn) {
  std::ostringstream os;
  os << "(set-logic HORN)\n";
  std::vector<const PredicateDecl*> decls;
  for (const auto& d : horn.unknowns) decls.push_back(&d);
  std::sort(decls.begin(), decls.end(),
            [](const PredicateDecl* a, const PredicateDecl* b) { return a->name < b->name; });
  for (const auto* d : decls)
    os << "(declare-fun " << smt_symbol(d->name) << " " << sort_list(d->params.sorts())
       << " Bool)\n";
  for (const auto& c : horn.clauses) os << "(assert " << emit_clause(c) << ")\n";
  os << "(check-sat)\n";
  if (!horn.clauses.empty()) os << "(get-model)\n";
  return os.str();
}

Solution parse_model(std::string_view text, const std::vector<PredicateDecl>& decls) {
  std::vector<SExpr> forms = read_sexprs(text);
  std::vector<const SExpr*> defs;
  for (const auto& f : forms) {
    if (f.is_atom) {
      if (f.text == "sat") continue;
      parse_fail(f, "unexpected '" + f.text + "' in model");
    }
    collect_defs(f, defs);
  }
  Solution sol;
  for (const SExpr* d : defs) {
    if (d->items.size() != 5 || !d->items[1].is_atom || !d->items[2].is_list())
      parse_fail(*d, "malformed define-fun");
    const std::string& name = d->items[1].text;
    auto decl = std::find_if(decls.begin(), decls.end(),
                             [&](const PredicateDecl& p) { return p.name == name; });
    if (decl == decls.end()) parse_fail(*d, "definition of undeclared symbol '" + name + "'");
    if (sol.count(name)) parse_fail(*d, "duplicate definition of '" + name + "'");
    if (parse_sort(d->items[3]) != Sort::boolean()) parse_fail(d->items[3], "predicate must return Bool");
    const SExpr& params = d->items[2];
    if (params.items.size() != decl->params.size())
      parse_fail(params, "arity of '" + name + "' differs from its declaration");
    Expr body;
    if (params.items.empty()) {
      body = parse_formula(d->items[4], Vocabulary{});
    } else {
      // parse under a binder so the parameters are in scope
      SExpr wrap;
      wrap.is_atom = false;
      wrap.line = d->line;
      wrap.col = d->col;
      SExpr head;
      head.text = "forall";
      wrap.items = {head, params, d->items[4]};
      Expr q = parse_formula(wrap, Vocabulary{});
      Substitution m;
      for (size_t i = 0; i < q.bound().size(); ++i) {
        const Var& want = decl->params.vars()[i];
        if (q.bound()[i].sort != want.sort)
          parse_fail(params.items[i], "sort of parameter " + std::to_string(i + 1) + " of '" + name +
                                          "' differs from its declaration");
        m[q.bound()[i]] = var_expr(want);
      }
      body = substitute(q.body(), m);
    }
    sol[name] = Definition{decl->params, body};
  }
  for (const auto& d : decls)
    if (!sol.count(d.name)) throw Error("model has no definition for '" + d.name + "'");
  return sol;
}

SolverOutcome solve(const HornSystem& horn, const SolverConfig& config) {
  SolverOutcome o;
  o.input = emit_horn_text(horn);
  Run r = run_solver(o.input, config);
  o.transcript = r.transcript;
  o.seconds = r.proc.seconds;
  if (r.proc.launch_failed) {
    o.reason = "could not launch " + config.executable;
    return o;
  }
  if (r.proc.timed_out) {
    o.kind = SolverOutcome::Kind::Timeout;
    o.reason = "timeout after " + std::to_string(config.timeout_seconds) + " s";
    return o;
  }
  size_t rest = 0;
  std::string answer = first_answer(r.proc.out, rest);
  if (answer == "unsat") {
    o.kind = SolverOutcome::Kind::Unsat;
  } else if (answer == "sat") {
    try {
      o.solution = parse_model(std::string_view(r.proc.out).substr(rest), horn.unknowns);
      o.kind = SolverOutcome::Kind::Sat;
    } catch (const Error& e) {
      o.reason = std::string("sat, but the model could not be read: ") + e.what();
    }
  } else if (answer == "unknown") {
    o.reason = "solver answered unknown";
  } else {
    o.reason = "unexpected solver output (exit " + std::to_string(r.proc.exit_code) + "): " +
               (answer.empty() ? r.proc.err.substr(0, 200) : answer.substr(0, 200));
  }
  return o;
}

std::string emit_validity_text(const Expr& f, const Signature& uninterpreted) {
  std::ostringstream os;
  os << "(set-option :produce-models true)\n";
  for (const auto& [name, sorts] : uninterpreted)
    os << "(declare-fun " << smt_symbol(name) << " " << sort_list(sorts) << " Bool)\n";
  Vocabulary fv = free_vars(f);
  for (const auto& v : fv)
    os << "(declare-fun " << print_var(v, SymbolStyle::SmtLib) << " () " << v.sort.to_string()
       << ")\n";
  os << "(assert (not " << print_formula(f, SymbolStyle::SmtLib) << "))\n(check-sat)\n";
  if (!fv.empty()) {
    os << "(get-value (";
    bool first = true;
    for (const auto& v : fv) {
      os << (first ? "" : " ") << print_var(v, SymbolStyle::SmtLib);
      first = false;
    }
    os << "))\n";
  }
  return os.str();
}

ValidityResult check_validity(const Expr& f, const SolverConfig& config,
                              const Signature& uninterpreted) {
  ValidityResult v;
  if (!f.sort().is_bool()) throw SortError("validity query must be Bool");
  Run r = run_solver(emit_validity_text(f, uninterpreted), config);
  v.transcript = r.transcript;
  v.seconds = r.proc.seconds;
  if (r.proc.launch_failed) {
    v.reason = "could not launch " + config.executable;
    return v;
  }
  if (r.proc.timed_out) {
    v.reason = "timeout";
    return v;
  }
  size_t rest = 0;
  std::string answer = first_answer(r.proc.out, rest);
  if (answer == "unsat") {
    v.kind = ValidityResult::Kind::Valid;
  } else if (answer == "sat") {
    v.kind = ValidityResult::Kind::Invalid;
    try {
      for (const auto& form : read_sexprs(std::string_view(r.proc.out).substr(rest)))
        if (form.is_list())
          for (const auto& pair : form.items)
            if (pair.is_list() && pair.items.size() == 2)
              v.counter_model[pair.items[0].to_string()] = pair.items[1].to_string();
    } catch (const ParseError&) {
      // counter-model is informational only
    }
  } else if (answer == "unknown") {
    v.reason = "solver answered unknown";
  } else {
    v.reason = "unexpected solver output: " + (answer.empty() ? r.proc.err.substr(0, 200)
                                                              : answer.substr(0, 200));
  }
  return v;
}

}  // namespace hyperhorn
