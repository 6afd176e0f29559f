#pragma once

#include <vector>

#include "hyperhorn/formula.hpp"
#include "hyperhorn/horn.hpp"

namespace hyperhorn {

// Boolean formulas over the composed state variables (and, in game modes,
// the universal labels W).
struct PredicateSet {
  std::vector<Expr> preds;
};

// Checks sorts and vocabulary; throws on the first problem.
PredicateSet make_predicate_set(std::vector<Expr> preds, const Vocabulary& v,
                                const Vocabulary& w);

// Each step clause constraint delta(V, V', ...) becomes
//   EQ(V, V^) and delta(V^, V^', ...) and EQ(V^', V')
// with EQ(X, Y) = AND_p p(X) <-> p(Y); the hatted copies join the clause
// universals. Other clauses are kept verbatim.
HornSystem abstract_horn(const HornSystem& horn, const PredicateSet& preds);

// One query per step clause: the concrete constraint implies the abstract one
// with the hatted copies set to the plain ones.
std::vector<ValidityQuery> abstraction_monotonicity_queries(const HornSystem& concrete,
                                                            const HornSystem& abstracted);

}  // namespace hyperhorn
