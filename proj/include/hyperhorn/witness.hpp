#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperhorn/horn.hpp"
#include "hyperhorn/scheme.hpp"
#include "hyperhorn/solver.hpp"

namespace hyperhorn {

// Relational invariant and arbiter (alignment / strategy) of a proof.
struct Witness {
  Mode mode = Mode::KSafety;
  Expr invariant;  // Inv over V
  std::vector<std::pair<ChoiceTag, Expr>> arbiter;  // A_u over V and W
  bool invariant_quantified = false;  // Inv keeps the forall over W
  Solution as_solution;  // Inv and A_u keyed by predicate name
};

Witness reconstruct_witness(const Solution& d_solution, const SchemeSystem& scheme);
// from first-order Inv/A_u definitions (e.g. a hand-written proof)
Witness witness_from_fol(const Solution& fol, const SchemeSystem& scheme);

struct CheckedQuery {
  std::string name;
  Expr formula;
  ValidityResult result;
};

// Runs the queries concurrently (at most `jobs` solver sessions at a time).
std::vector<CheckedQuery> check_queries(const std::vector<ValidityQuery>& queries,
                                        const SolverConfig& config, int jobs = 4);

struct ValidationReport {
  std::vector<CheckedQuery> obligations;

  bool all_valid() const;
  size_t failures() const;
};

// The 3 + 2|U| scheme formulas with Inv/A_u substituted.
ValidationReport validate_witness(const Witness& w, const SchemeSystem& scheme,
                                  const SolverConfig& config, int jobs = 4);
// Each Horn clause with its unknowns substituted.
ValidationReport validate_solution(const HornSystem& horn, const Solution& sol,
                                   const SolverConfig& config, int jobs = 4);

enum class VerdictKind { Verified, Violated, Inconclusive };

std::string verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string reason;
  std::optional<Witness> witness;
};

Verdict decide_verdict(const SolverOutcome& outcome, Mode mode, bool abstracted);

// 0 verified, 1 violated, 2 inconclusive
int exit_code(VerdictKind k);

}  // namespace hyperhorn
