#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperhorn/formula.hpp"
#include "hyperhorn/formula_io.hpp"

namespace hyperhorn {

struct SolverConfig;

// Symbolic labeled transition system (V, l, Init, Tr).
struct TransitionSystem {
  Vocabulary vocab;
  std::optional<Var> label;                      // absent: single implicit label
  std::optional<std::vector<Expr>> label_domain;  // absent: infinite
  Expr init = true_expr();
  Expr tr = false_expr();
  bool totalized = false;

  // V, l, V' in that order
  Vocabulary tr_vocab() const;
  bool finite_labels() const { return !label || label_domain.has_value(); }
  // membership of l in its declared finite domain (true otherwise)
  Expr label_guard() const;
};

// One system per trace, or a single system shared by all traces.
class SystemFamily {
 public:
  SystemFamily() = default;
  explicit SystemFamily(std::vector<TransitionSystem> systems);
  SystemFamily(const TransitionSystem& shared) : systems_{shared} {}  // NOLINT

  const TransitionSystem& trace(int i) const;  // 1-based
  size_t size() const { return systems_.size(); }
  const std::vector<TransitionSystem>& systems() const { return systems_; }

  SystemFamily totalized() const;
  // V_1 .. V_k
  Vocabulary composed_vocab(int k) const;
  // l_i when trace i has a label
  std::optional<Var> label_var(int i) const;
  // label vars of traces from..to (inclusive) that exist
  Vocabulary label_vars(int from, int to) const;

 private:
  std::vector<TransitionSystem> systems_;
};

struct HyperSpec {
  int k = 1;
  int l = 1;
  Expr pre = true_expr();
  std::vector<Expr> obs;  // xi_1..xi_k over copy-free V
  Expr phi = true_expr();

  bool is_ksafety() const { return l == k; }
};

// Tr or ((forall l V'. not Tr) and V' = V), with the label domain conjoined
// into Tr first. The stuck condition is simplified by exact rewrites.
TransitionSystem totalize(const TransitionSystem& ts);

struct DeterminismResult {
  enum class Kind { Deterministic, Nondeterministic, Unknown };
  Kind kind = Kind::Unknown;
  std::map<std::string, std::string> witness;  // counter-model, symbol -> value
  std::string reason;
};

// Satisfiability of Tr(V,l,V') and Tr(V,l,V'') and V' != V''.
Expr determinism_query(const TransitionSystem& ts);
DeterminismResult check_determinism(const TransitionSystem& ts, const SolverConfig& config);

std::vector<std::string> validate_spec(const SystemFamily& family, const HyperSpec& spec);

// (system (vars (a Int) ...) (label (l Int) [(domain c ...)]) (init F) (tr F))
TransitionSystem parse_system(std::string_view text);
// (spec (forall l) (exists m) (pre F) (observe i F) ... (global F))
HyperSpec parse_spec(std::string_view text, const SystemFamily& family);
// (<head> F1 F2 ...) over the given vocabulary
std::vector<Expr> parse_formula_list(std::string_view text, std::string_view head,
                                     const Vocabulary& vocab);

std::string read_file(const std::string& path);

}  // namespace hyperhorn
