#pragma once

#include <map>
#include <vector>

#include "hyperhorn/formula.hpp"

namespace hyperhorn {

// Bottom-up constant folding (boolean connectives, literal comparisons,
// literal arithmetic, x = x). Never changes meaning.
Expr simplify(const Expr& f);

struct EliminationOptions {
  // bound variables that range over a finite set of values
  std::map<Var, std::vector<Expr>> finite_domains;
  // cap on disjuncts produced by distributing over disjunctions
  int max_disjuncts = 256;
};

// Equivalent form of (exists vars. body). Uses the one-point rule, solving a
// unit-coefficient summand, distribution over disjunction, finite domain
// expansion and the unbounded-integer single-inequality rule. Whatever cannot
// be removed stays as a (non-hoistable) existential.
Expr eliminate_exists(const std::vector<Var>& vars, const Expr& body,
                      const EliminationOptions& opts = {});

// Negation normal form for the boolean skeleton above quantifiers, so that no
// quantifier occurs under a negation, implication antecedent, iff or ite.
// Subformulas without quantifiers are left verbatim.
Expr push_negations(const Expr& f);

struct Hoisted {
  std::vector<Var> vars;
  Expr body;
};

// Pull existentials that are reachable through and/or only (positive,
// not below a universal) out of f, renaming them apart from `taken`.
Hoisted hoist_existentials(const Expr& f, std::vector<Var> taken);

}  // namespace hyperhorn
