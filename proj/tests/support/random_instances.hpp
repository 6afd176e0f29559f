#pragma once

#include <random>
#include <string>

#include "hyperhorn/scheme.hpp"

namespace hhtest {

// Scheme over 1..3 Boolean state variables, optionally one Boolean extra
// argument for the arbiters (|V| + |W| <= 3), 1..3 choices, with every
// constraint a random truth table written as a disjunction of minterms.
hyperhorn::SchemeSystem random_bool_scheme(std::mt19937& rng);

// A labeled system over one variable x in 0..3, labels {0, 1}, each
// (x, label) pair sending x to a random value (a state may instead be
// stuck), and a forall-exists spec over two traces built from random
// relations on (x@1, x@2). All texts are in the input file formats.
struct Mod4Instance {
  std::string system;
  std::string spec;
  std::string bounds;
  std::string restrictions;  // a few relational restrictions
};
Mod4Instance random_mod4_instance(std::mt19937& rng);

}  // namespace hhtest
