#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperhorn/composition.hpp"
#include "hyperhorn/formula.hpp"
#include "hyperhorn/formula_io.hpp"
#include "hyperhorn/system.hpp"

namespace hyperhorn {

enum class Mode { KSafety, GameFinite, GameRestricted };

std::string mode_name(Mode m);

struct RestrictionChoice {
  size_t index = 0;
  Restriction restriction;
};

// One verifier choice u: a schedule plus, in game modes, existential labels
// or a restriction.
struct ChoiceTag {
  Schedule schedule;
  std::variant<std::monostate, std::vector<Expr>, RestrictionChoice> witness;

  // stable identifier used in predicate names, e.g. "m3", "m1_l0", "m2_r1"
  std::string canonical() const;
  // human readable, e.g. "{1,2}", "{1},<0>", "{2},p1"
  std::string display() const;
};

// First-order system with unknowns Inv(V) and A_u(V,W):
//   alpha -> Inv;  Inv & beta -> false;  Inv & A_u & gamma_u -> false;
//   Inv & A_u & delta_u -> Inv';  Inv -> OR_u A_u
struct SchemeSystem {
  Vocabulary v_vocab;
  Vocabulary w_vocab;
  std::vector<ChoiceTag> choices;
  Expr alpha;
  Expr beta;
  std::vector<Expr> gamma;  // indexed like choices
  std::vector<Expr> delta;
  Mode mode = Mode::KSafety;

  size_t formula_count() const { return 3 + 2 * choices.size(); }
  std::string inv_name() const { return "Inv"; }
  std::string arbiter_name(size_t u) const { return "A_" + choices[u].canonical(); }
  // throws on violated invariants
  void check() const;
  std::string dump() const;
};

struct SchemeFormula {
  std::string role;  // "initiation", "safety", "validity m1", "consecution m1", "cover"
  Expr formula;      // free over V, W, V'; Inv/A_u appear as applications
};

// The 3 + 2|U| formulas, with Inv and A_u as unknown applications.
std::vector<SchemeFormula> scheme_formulas(const SchemeSystem& s);
Signature scheme_signature(const SchemeSystem& s);

SchemeSystem build_ksafety_scheme(const SystemFamily& family, const HyperSpec& spec);
SchemeSystem build_game_finite_scheme(const SystemFamily& family, const HyperSpec& spec);
SchemeSystem build_game_restricted_scheme(const SystemFamily& family, const HyperSpec& spec,
                                          const std::vector<Restriction>& restrictions);

}  // namespace hyperhorn
