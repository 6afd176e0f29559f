#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperhorn/abstraction.hpp"
#include "hyperhorn/horn.hpp"
#include "hyperhorn/scheme.hpp"
#include "hyperhorn/solver.hpp"
#include "hyperhorn/system.hpp"
#include "hyperhorn/witness.hpp"

namespace hyperhorn {

// An error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& msg)
      : Error("[" + stage + "] " + msg), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineInput {
  SystemFamily family;
  HyperSpec spec;
  Mode mode = Mode::KSafety;
  std::vector<Restriction> restrictions;
  std::vector<Expr> predicates;  // empty: concrete
};

struct PipelineOptions {
  SolverConfig solver = SolverConfig::from_env();
  bool emit_only = false;
  bool check_determinism = false;
  bool allow_nondeterministic = false;
  bool certify = false;
  bool validate = true;
  int jobs = 4;
};

struct PipelineResult {
  SchemeSystem scheme;
  HornSystem horn;  // as sent to the solver
  bool abstracted = false;
  std::string horn_text;
  std::vector<std::string> lint;
  std::vector<std::pair<std::string, DeterminismResult>> determinism;
  std::optional<SolverOutcome> outcome;
  std::optional<Verdict> verdict;  // absent in emit-only runs
  ValidationReport validation;
  std::vector<CheckedQuery> certificates;
  std::map<std::string, double> seconds;
  std::vector<std::string> notes;

  int exit_code() const;
};

// Stage errors are raised as StageError.
PipelineResult run_pipeline(const PipelineInput& input, const PipelineOptions& options);

// Text files -> PipelineInput.
struct InputFiles {
  std::vector<std::string> systems;  // one shared or one per trace
  std::string spec;
  std::optional<std::string> predicates;
  std::optional<std::string> restrictions;
};
PipelineInput load_input(const InputFiles& files, Mode mode);

std::string report_text(const PipelineResult& r);
std::string report_json(const PipelineResult& r);

std::optional<Mode> parse_mode(const std::string& s);

}  // namespace hyperhorn
