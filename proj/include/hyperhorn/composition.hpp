#pragma once

#include <string>
#include <vector>

#include "hyperhorn/formula.hpp"
#include "hyperhorn/system.hpp"

namespace hyperhorn {

// Nonempty set of trace indices stepping together, as a bit mask (bit i-1 = trace i).
struct Schedule {
  unsigned mask = 1;

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  std::vector<int> members() const;
  bool is_full(int k) const { return mask == (1u << k) - 1; }
  std::string tag() const { return "m" + std::to_string(mask); }
  std::string to_string() const;  // "{1,2}"

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Relational predicate over V_1..V_k (unprimed, no labels, no unknowns).
struct Restriction {
  Expr predicate;
};

Restriction make_restriction(const Expr& p, const Vocabulary& composed);

// All 2^k - 1 schedules in binary-counter order.
std::vector<Schedule> schedules(int k);

// xi_1(V_1) and ... and xi_k(V_k) and not phi
Expr bad_constraint(const HyperSpec& spec);
Expr valid_constraint(const Schedule& m, const HyperSpec& spec);

// Tr(V_i, l_i, V_i') for i in M, V_i = V_i' otherwise
Expr delta_big(const SystemFamily& family, const Schedule& m, int k);
// exists L. delta_big, marked hoistable
Expr delta_exists_labels(const SystemFamily& family, const Schedule& m, int k);
// delta_big with l_{l+1}..l_k replaced by the given constants
Expr delta_concrete_choice(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
                           const std::vector<Expr>& ell_exists);
// exists V', L_exists. delta_big and p(V')
Expr allowed(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
             const Restriction& p);
// (exists L_exists. delta_big) and (allowed -> p(V'))
Expr delta_restricted(const SystemFamily& family, const Schedule& m, const HyperSpec& spec,
                      const Restriction& p);

}  // namespace hyperhorn
