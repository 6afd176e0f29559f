// hyperhorn: compile a forall*exists* property of a transition system into
// constrained Horn clauses, solve them, and report a verdict.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hyperhorn/oracle.hpp"
#include "hyperhorn/pipeline.hpp"

namespace fs = std::filesystem;
using namespace hyperhorn;

namespace {

constexpr int kUsage = 3;
constexpr int kInternal = 4;

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

int run_oracle(const std::vector<std::string>& systems, const std::string& spec_file,
               const std::string& bounds_file) {
  std::vector<TransitionSystem> ts;
  for (const auto& s : systems) ts.push_back(parse_system(read_file(s)));
  SystemFamily family = ts.size() == 1 ? SystemFamily(ts[0]) : SystemFamily(ts);
  HyperSpec spec = parse_spec(read_file(spec_file), family);
  Bounds b = parse_bounds(read_file(bounds_file));
  OracleResult r = game_oracle(family, spec, b);
  std::cout << "winner: " << (r.verifier_wins() ? "verifier" : "falsifier")
            << (r.trusted ? "" : " (untrusted: bounds cut the game)") << "\n"
            << "falsifier nodes: " << r.falsifier_nodes << ", verifier nodes: " << r.verifier_nodes
            << ", attractor: " << r.attractor_size << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  return r.verifier_wins() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperhorn: relational verification through constrained Horn clauses"};
  app.set_version_flag("--version", "hyperhorn 0.1");

  std::string mode_text = "ksafety";
  InputFiles files;
  std::string predicates, restrictions;
  PipelineOptions opt;
  std::string solver;
  std::vector<std::string> solver_args;
  double timeout = 300;
  std::string out_dir = "hyperhorn-out";

  app.add_option("--mode", mode_text, "ksafety | forall-exists-finite | forall-exists-restricted")
      ->capture_default_str();
  app.add_option("--system", files.systems, "system file (one shared, or one per trace)");
  app.add_option("--spec", files.spec, "specification file");
  app.add_option("--predicates", predicates, "abstraction predicates file");
  app.add_option("--restrictions", restrictions, "restrictions file (restricted mode)");
  app.add_option("--solver", solver, "CHC solver executable (default: $HYPERHORN_SOLVER or z3)");
  app.add_option("--solver-arg", solver_args, "extra solver argument (repeatable)");
  app.add_option("--timeout", timeout, "solver timeout in seconds")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "concurrent validity checks")->capture_default_str()->check(CLI::Range(1, 64));
  app.add_flag("--emit-only", opt.emit_only, "write the Horn system and stop");
  app.add_flag("--check-determinism", opt.check_determinism, "check determinism in k-safety mode too");
  app.add_flag("--allow-nondeterministic", opt.allow_nondeterministic,
               "run game modes on systems found nondeterministic");
  app.add_flag("--certify-transformation", opt.certify, "check the model-translation certificates");
  app.add_flag("--no-validate", [&](int64_t) { opt.validate = false; }, "skip witness validation");

  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");  // debugging aid, not advertised
  std::vector<std::string> oracle_systems;
  std::string oracle_spec, oracle_bounds;
  oracle->add_option("--system", oracle_systems)->required();
  oracle->add_option("--spec", oracle_spec)->required();
  oracle->add_option("--bounds", oracle_bounds)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*oracle) return run_oracle(oracle_systems, oracle_spec, oracle_bounds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }

  auto mode = parse_mode(mode_text);
  if (!mode) {
    std::cerr << "error: unknown mode '" << mode_text << "'\n";
    return kUsage;
  }
  if (files.systems.empty() || files.spec.empty()) {
    std::cerr << "error: --system and --spec are required\n" << app.help();
    return kUsage;
  }
  if (!predicates.empty()) files.predicates = predicates;
  if (!restrictions.empty()) files.restrictions = restrictions;
  opt.solver = SolverConfig::from_env();
  if (!solver.empty()) opt.solver.executable = solver;
  opt.solver.extra_args = solver_args;
  opt.solver.timeout_seconds = timeout;

  try {
    PipelineInput in = load_input(files, *mode);
    fs::create_directories(out_dir);
    PipelineResult r = run_pipeline(in, opt);
    write(fs::path(out_dir) / "scheme.txt", r.scheme.dump());
    write(fs::path(out_dir) / "horn.smt2", r.horn_text);
    if (r.outcome) write(fs::path(out_dir) / "transcript.txt", r.outcome->transcript);
    std::string text = report_text(r);
    write(fs::path(out_dir) / "report.txt", text);
    write(fs::path(out_dir) / "report.json", report_json(r));
    std::cout << text;
    return r.exit_code();
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // parse, shape and determinism refusals are about the input
    bool input = e.stage() == "parse" || e.stage() == "scheme" || e.stage() == "determinism";
    return input ? kUsage : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
