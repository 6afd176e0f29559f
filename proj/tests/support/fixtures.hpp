#pragma once

#include <string>
#include <vector>

#include "hyperhorn/horn.hpp"
#include "hyperhorn/pipeline.hpp"
#include "hyperhorn/scheme.hpp"
#include "hyperhorn/solver.hpp"
#include "hyperhorn/system.hpp"

namespace hhtest {

// absolute path of a file under benchmarks/
std::string bench(const std::string& rel);

// HYPERHORN_SOLVER or z3, as the CLI would pick it
hyperhorn::SolverConfig solver_config(double timeout_seconds = 60);
bool solver_available();

hyperhorn::PipelineInput load(hyperhorn::Mode mode, const std::vector<std::string>& systems,
                              const std::string& spec, const std::string& predicates = "",
                              const std::string& restrictions = "");

// The running example: squaresSum with the two-run comparison spec.
struct RunningExample {
  hyperhorn::SystemFamily family;
  hyperhorn::HyperSpec spec;
  hyperhorn::Vocabulary composed;  // a@1 b@1 c@1 a@2 b@2 c@2
};
RunningExample running_example(const std::string& spec_file = "squares_sum/spec.hh");

// The ten Horn clauses written out by hand over D1, D2, D12 (the doomed
// predicates of schedules {1}, {2}, {1,2}), in the order query, three bad,
// three invalid, three step. The transition relation is the totalized one:
// a stuck state (a >= b) stays put.
std::vector<hyperhorn::Expr> running_example_clauses_by_hand();

// The hand-written proof of the running example: Inv, A_{1}, A_{2}, A_{1,2}
// keyed by "Inv", "A1", "A2", "A12".
std::map<std::string, hyperhorn::Expr> textbook_solution();

}  // namespace hhtest
