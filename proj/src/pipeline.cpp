#include "hyperhorn/pipeline.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "hyperhorn/formula_io.hpp"

namespace hyperhorn {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const ParseError& e) {
    throw StageError(name, std::string(e.what()) + " (line " + std::to_string(e.line()) + ", column " +
                               std::to_string(e.col()) + ")");
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::string determinism_name(DeterminismResult::Kind k) {
  switch (k) {
    case DeterminismResult::Kind::Deterministic:
      return "deterministic";
    case DeterminismResult::Kind::Nondeterministic:
      return "nondeterministic";
    case DeterminismResult::Kind::Unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace

std::optional<Mode> parse_mode(const std::string& s) {
  for (Mode m : {Mode::KSafety, Mode::GameFinite, Mode::GameRestricted})
    if (mode_name(m) == s) return m;
  return std::nullopt;
}

int PipelineResult::exit_code() const {
  if (!verdict) return 0;
  return hyperhorn::exit_code(verdict->kind);
}

PipelineResult run_pipeline(const PipelineInput& in, const PipelineOptions& opt) {
  PipelineResult r;
  const bool game = in.mode != Mode::KSafety;

  if (game || opt.check_determinism) {
    auto t0 = Clock::now();
    stage("determinism", [&] {
      for (size_t i = 0; i < in.family.size(); ++i) {
        std::string who = in.family.size() == 1 ? "system" : "system " + std::to_string(i + 1);
        DeterminismResult d = check_determinism(in.family.systems()[i],
                                                opt.solver.with_mode(SolverConfig::Mode::CheckValidity));
        r.determinism.emplace_back(who, d);
        if (d.kind == DeterminismResult::Kind::Nondeterministic && game && !opt.allow_nondeterministic)
          throw Error(who + " is nondeterministic; the game encodings assume a deterministic labeled system "
                            "(pass --allow-nondeterministic to proceed anyway)");
        if (d.kind == DeterminismResult::Kind::Unknown)
          r.notes.push_back("determinism of " + who + " is unknown: " + d.reason);
      }
      return 0;
    });
    r.seconds["determinism"] = since(t0);
  }

  auto t0 = Clock::now();
  r.scheme = stage("scheme", [&] {
    switch (in.mode) {
      case Mode::KSafety:
        return build_ksafety_scheme(in.family, in.spec);
      case Mode::GameFinite:
        return build_game_finite_scheme(in.family, in.spec);
      case Mode::GameRestricted:
        return build_game_restricted_scheme(in.family, in.spec, in.restrictions);
    }
    throw Error("unknown mode");
  });
  r.seconds["scheme"] = since(t0);

  t0 = Clock::now();
  HornSystem concrete = stage("transform", [&] { return transform(r.scheme); });
  r.horn = concrete;
  if (!in.predicates.empty()) {
    r.horn = stage("abstraction", [&] {
      return abstract_horn(concrete, make_predicate_set(in.predicates, concrete.v_vocab, concrete.w_vocab));
    });
    r.abstracted = true;
  }
  r.lint = lint_horn(r.horn);
  if (!r.lint.empty()) throw StageError("lint", r.lint.front());
  r.horn_text = emit_horn_text(r.horn);
  r.seconds["transform"] = since(t0);

  if (opt.certify) {
    t0 = Clock::now();
    r.certificates = stage("certify", [&] {
      auto qs = emit_translation_certificates(r.scheme, concrete);
      if (r.abstracted)
        for (auto& q : abstraction_monotonicity_queries(concrete, r.horn)) qs.push_back(q);
      return check_queries(qs, opt.solver.with_mode(SolverConfig::Mode::CheckValidity), opt.jobs);
    });
    r.seconds["certify"] = since(t0);
  }

  if (opt.emit_only) {
    r.notes.push_back("emit-only: no solver launched");
    return r;
  }

  t0 = Clock::now();
  r.outcome = stage("solve", [&] { return solve(r.horn, opt.solver); });
  r.seconds["solve"] = since(t0);
  Verdict v = decide_verdict(*r.outcome, in.mode, r.abstracted);

  if (v.kind == VerdictKind::Verified) {
    t0 = Clock::now();
    v.witness = stage("witness", [&] { return reconstruct_witness(r.outcome->solution, r.scheme); });
    if (v.witness->invariant_quantified)
      r.notes.push_back("the invariant keeps a universal quantifier over the universal labels");
    if (opt.validate) {
      r.validation = stage("validate", [&] {
        return validate_witness(*v.witness, r.scheme, opt.solver, opt.jobs);
      });
      if (!r.validation.all_valid()) {
        v.kind = VerdictKind::Inconclusive;
        v.reason = "solver reported sat but the reconstructed witness failed " +
                   std::to_string(r.validation.failures()) + " of " +
                   std::to_string(r.validation.obligations.size()) + " obligations";
      }
    }
    r.seconds["validate"] = since(t0);
  }
  r.verdict = v;
  return r;
}

PipelineInput load_input(const InputFiles& files, Mode mode) {
  PipelineInput in;
  in.mode = mode;
  auto load = [](const std::string& what, const std::string& path, auto&& f) {
    try {
      return f(read_file(path));
    } catch (const ParseError& e) {
      throw StageError("parse", path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.col()) + ": " +
                                    e.what());
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError("parse", what + " " + path + ": " + e.what());
    }
  };
  if (files.systems.empty()) throw StageError("parse", "no system file given");
  std::vector<TransitionSystem> systems;
  for (const auto& p : files.systems)
    systems.push_back(load("system", p, [](const std::string& t) { return parse_system(t); }));
  in.family = systems.size() == 1 ? SystemFamily(systems[0]) : SystemFamily(systems);
  in.spec = load("spec", files.spec, [&](const std::string& t) { return parse_spec(t, in.family); });
  Vocabulary composed = in.family.composed_vocab(in.spec.k);
  if (files.predicates) {
    Vocabulary vocab = composed;
    if (mode != Mode::KSafety) vocab.add_all(in.family.label_vars(1, in.spec.l));
    in.predicates = load("predicates", *files.predicates, [&](const std::string& t) {
      return parse_formula_list(t, "predicates", vocab);
    });
    if (in.predicates.empty()) throw StageError("parse", "predicate file lists no predicates");
  }
  if (files.restrictions) {
    if (mode != Mode::GameRestricted) throw StageError("parse", "restrictions are only used in restricted mode");
    auto ps = load("restrictions", *files.restrictions, [&](const std::string& t) {
      return parse_formula_list(t, "restrictions", composed);
    });
    for (const auto& p : ps) in.restrictions.push_back(stage("parse", [&] { return make_restriction(p, composed); }));
  } else if (mode == Mode::GameRestricted) {
    throw StageError("parse", "restricted mode needs --restrictions");
  }
  return in;
}

std::string report_text(const PipelineResult& r) {
  std::ostringstream os;
  os << "mode: " << mode_name(r.scheme.mode) << (r.abstracted ? " (predicate abstraction)" : "") << "\n";
  os << "choices: " << r.scheme.choices.size() << ", clauses: " << r.horn.clauses.size() << "\n";
  for (const auto& [who, d] : r.determinism) os << who << ": " << determinism_name(d.kind) << "\n";
  if (!r.certificates.empty()) {
    size_t ok = 0;
    for (const auto& c : r.certificates) ok += c.result.kind == ValidityResult::Kind::Valid ? 1 : 0;
    os << "certificates: " << ok << "/" << r.certificates.size() << " valid\n";
    for (const auto& c : r.certificates)
      if (c.result.kind != ValidityResult::Kind::Valid)
        os << "  " << c.name << ": " << validity_name(c.result.kind) << " " << c.result.reason << "\n";
  }
  if (r.outcome) os << "solver: " << outcome_name(r.outcome->kind) << " in " << r.outcome->seconds << " s\n";
  if (r.verdict) {
    os << "verdict: " << verdict_name(r.verdict->kind);
    if (!r.verdict->reason.empty()) os << " (" << r.verdict->reason << ")";
    os << "\n";
    if (r.verdict->kind == VerdictKind::Violated)
      os << "no counterexample trace is reconstructed; see the solver transcript\n";
    if (r.verdict->witness) {
      const Witness& w = *r.verdict->witness;
      os << "invariant: " << print_formula(w.invariant) << "\n";
      for (const auto& [tag, f] : w.arbiter) os << "arbiter " << tag.display() << ": " << print_formula(f) << "\n";
    }
    if (!r.validation.obligations.empty()) {
      os << "obligations: " << r.validation.obligations.size() - r.validation.failures() << "/"
         << r.validation.obligations.size() << " valid\n";
      for (const auto& o : r.validation.obligations)
        if (o.result.kind != ValidityResult::Kind::Valid)
          os << "  " << o.name << ": " << validity_name(o.result.kind) << "\n    " << print_formula(o.formula)
             << "\n";
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string report_json(const PipelineResult& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["mode"] = mode_name(r.scheme.mode);
  j["abstracted"] = r.abstracted;
  j["choices"] = r.scheme.choices.size();
  j["clauses"] = r.horn.clauses.size();
  j["verdict"] = r.verdict ? verdict_name(r.verdict->kind) : "not-run";
  j["reason"] = r.verdict ? r.verdict->reason : "";
  j["exit_code"] = r.exit_code();
  if (r.outcome) j["solver"] = {{"answer", outcome_name(r.outcome->kind)}, {"seconds", r.outcome->seconds},
                                {"reason", r.outcome->reason}};
  if (r.verdict && r.verdict->witness) {
    const Witness& w = *r.verdict->witness;
    ordered_json arb = ordered_json::object();
    for (const auto& [tag, f] : w.arbiter) arb[tag.canonical()] = print_formula(f);
    j["witness"] = {{"invariant", print_formula(w.invariant)},
                    {"invariant_quantified", w.invariant_quantified},
                    {"arbiter", arb}};
  }
  auto checked = [](const std::vector<CheckedQuery>& qs) {
    ordered_json a = ordered_json::array();
    for (const auto& q : qs)
      a.push_back({{"name", q.name}, {"result", validity_name(q.result.kind)}, {"seconds", q.result.seconds},
                   {"reason", q.result.reason}});
    return a;
  };
  j["obligations"] = checked(r.validation.obligations);
  j["certificates"] = checked(r.certificates);
  ordered_json det = ordered_json::array();
  for (const auto& [who, d] : r.determinism)
    det.push_back({{"system", who}, {"result", determinism_name(d.kind)}, {"witness", d.witness}});
  j["determinism"] = det;
  j["timings"] = r.seconds;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

}  // namespace hyperhorn
