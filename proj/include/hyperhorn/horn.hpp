#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperhorn/formula.hpp"
#include "hyperhorn/formula_io.hpp"
#include "hyperhorn/scheme.hpp"

namespace hyperhorn {

struct PredicateDecl {
  std::string name;
  Vocabulary params;
};

struct PredicateApp {
  std::string name;
  std::vector<Expr> args;

  Expr to_expr() const { return apply_pred(name, args); }
};

// forall universals. body_1 & ... & body_n & constraint -> head (false if empty)
struct HornClause {
  Vocabulary universals;
  std::vector<PredicateApp> body;
  Expr constraint = true_expr();
  std::optional<PredicateApp> head;

  // closed formula with unknown applications
  Expr to_formula() const;
};

enum class ClauseRole { Query, Bad, Invalid, Step };

std::string role_name(ClauseRole r);

struct Provenance {
  ClauseRole role = ClauseRole::Query;
  std::optional<size_t> choice;  // index into the scheme's choices
};

struct HornSystem {
  std::vector<PredicateDecl> unknowns;
  std::vector<HornClause> clauses;
  std::vector<Provenance> provenance;  // parallel to clauses
  bool scheme_derived = false;
  size_t choice_count = 0;
  // variables of the underlying scheme, kept for abstraction
  Vocabulary v_vocab;
  Vocabulary w_vocab;

  Signature signature() const;
  const PredicateDecl& decl(const std::string& name) const;
};

// Definitions of unknown predicates over their parameter vocabularies.
struct Definition {
  Vocabulary params;
  Expr body;
};
using Solution = std::map<std::string, Definition>;

std::string doomed_name(const ChoiceTag& c);

HornSystem transform(const SchemeSystem& scheme);

// D_u := not (Inv and A_u)
Solution solution_fol_to_chc(const Solution& fol, const SchemeSystem& scheme);
// Inv := forall W. OR_u not D_u;  A_u := not D_u
Solution solution_chc_to_fol(const Solution& chc, const SchemeSystem& scheme);

// Replaces every unknown application by its definition.
Expr instantiate(const Expr& f, const Solution& sol);

struct ValidityQuery {
  std::string name;
  Expr formula;         // closed, may apply the uninterpreted symbols
  Signature uninterpreted;
};

// Model-translation certificates over uninterpreted Inv, A_u, D_u and
// uninterpreted stand-ins for alpha, beta, gamma_u, delta_u.
std::vector<ValidityQuery> emit_translation_certificates(const SchemeSystem& scheme,
                                                         const HornSystem& horn);

// Horn property, closedness, declared arities, clause count.
std::vector<std::string> lint_horn(const HornSystem& horn);

}  // namespace hyperhorn
