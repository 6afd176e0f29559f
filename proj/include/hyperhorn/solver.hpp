#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperhorn/formula.hpp"
#include "hyperhorn/formula_io.hpp"
#include "hyperhorn/horn.hpp"

namespace hyperhorn {

struct SolverConfig {
  enum class Mode { SolveHorn, CheckValidity };

  std::string executable = "z3";
  std::vector<std::string> extra_args;
  double timeout_seconds = 60;
  Mode mode = Mode::SolveHorn;
  // where query files are written; empty means the system temp directory
  std::string work_dir;

  // z3 unless HYPERHORN_SOLVER is set
  static SolverConfig from_env();
  SolverConfig with_mode(Mode m) const {
    SolverConfig c = *this;
    c.mode = m;
    return c;
  }
};

struct SolverOutcome {
  enum class Kind { Sat, Unsat, Unknown, Timeout };
  Kind kind = Kind::Unknown;
  Solution solution;  // on Sat
  std::string reason;
  std::string input;       // text given to the solver
  std::string transcript;  // command, stdout, stderr, exit status
  double seconds = 0;
};

std::string outcome_name(SolverOutcome::Kind k);

// SMT-LIB 2.6 text, logic HORN. Deterministic.
std::string emit_horn_text(const HornSystem& horn);

SolverOutcome solve(const HornSystem& horn, const SolverConfig& config);

// Reads define-fun forms (optionally wrapped in (model ...)) for every
// declared predicate; parameters are renamed to the declared vocabularies.
Solution parse_model(std::string_view text, const std::vector<PredicateDecl>& decls);

struct ValidityResult {
  enum class Kind { Valid, Invalid, Unknown };
  Kind kind = Kind::Unknown;
  std::map<std::string, std::string> counter_model;  // free constants only
  std::string reason;
  std::string transcript;
  double seconds = 0;
};

std::string validity_name(ValidityResult::Kind k);

// Satisfiability query for (not f); free variables become constants.
std::string emit_validity_text(const Expr& f, const Signature& uninterpreted = {});
ValidityResult check_validity(const Expr& f, const SolverConfig& config,
                              const Signature& uninterpreted = {});

}  // namespace hyperhorn
