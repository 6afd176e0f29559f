// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails. Arguments (criterion
// numbers, "smoke") restrict the run.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "canon.hpp"
#include "finite_chc.hpp"
#include "fixtures.hpp"
#include "hyperhorn/composition.hpp"
#include "hyperhorn/eval.hpp"
#include "hyperhorn/formula_io.hpp"
#include "hyperhorn/oracle.hpp"
#include "hyperhorn/pipeline.hpp"
#include "hyperhorn/process.hpp"
#include "hyperhorn/witness.hpp"
#include "random_instances.hpp"

using namespace hyperhorn;
using hhtest::bench;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Report {
  std::ostringstream detail;
  bool ok = true;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "  failed: " << what << "\n";
    }
  }
  void note(const std::string& s) { detail << "  " << s << "\n"; }
};

int failures = 0;
std::set<std::string> only;  // criteria named on the command line; empty runs all

bool selected(const std::string& what) { return only.empty() || only.count(what); }

// every emitted Horn system passes through here for criterion 9
std::vector<std::pair<std::string, HornSystem>> emitted;

void record(const std::string& name, const HornSystem& h) { emitted.emplace_back(name, h); }

void criterion(int n, const std::string& title, const std::function<void(Report&)>& body) {
  if (!selected(std::to_string(n))) return;
  Report r;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.check(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << buf << ")\n"
            << r.detail.str() << std::flush;
  if (!r.ok) ++failures;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

PipelineOptions options(double timeout) {
  PipelineOptions o;
  o.solver = hhtest::solver_config(timeout);
  o.jobs = 1;
  return o;
}

std::string verdict_of(const PipelineResult& r) {
  if (!r.verdict) return "none";
  std::string s = verdict_name(r.verdict->kind);
  if (r.verdict->kind == VerdictKind::Inconclusive) s += " (" + r.verdict->reason + ")";
  return s;
}

Solution textbook_fol(const SchemeSystem& s) {
  auto p = hhtest::textbook_solution();
  Solution fol;
  fol["Inv"] = Definition{s.v_vocab, p.at("Inv")};
  fol["A_m1"] = Definition{s.v_vocab, p.at("A1")};
  fol["A_m2"] = Definition{s.v_vocab, p.at("A2")};
  fol["A_m3"] = Definition{s.v_vocab, p.at("A12")};
  return fol;
}

void list_failures(Report& r, const ValidationReport& rep) {
  for (const auto& o : rep.obligations) {
    if (o.result.kind == ValidityResult::Kind::Valid) continue;
    std::string line = o.name + ": " + (o.result.kind == ValidityResult::Kind::Invalid ? "invalid" : "unknown");
    if (!o.result.counter_model.empty()) {
      line += " at";
      for (const auto& [k, v] : o.result.counter_model) line += " " + k + "=" + v;
    } else if (!o.result.reason.empty()) {
      line += " (" + o.result.reason + ")";
    }
    r.note(line);
  }
}

struct Toy {
  SystemFamily family;
  HyperSpec spec;
  Bounds bounds;
  std::vector<Restriction> restrictions;
};

Toy toy(const hhtest::Mod4Instance& m) {
  Toy t{SystemFamily(parse_system(m.system)), {}, parse_bounds(m.bounds), {}};
  t.spec = parse_spec(m.spec, t.family);
  Vocabulary v = t.family.composed_vocab(2);
  for (const auto& p : parse_formula_list(m.restrictions, "restrictions", v)) t.restrictions.push_back(make_restriction(p, v));
  return t;
}

std::string cli_emit(const std::vector<std::string>& extra, const fs::path& out) {
  std::vector<std::string> args{HH_CLI_PATH};
  args.insert(args.end(), extra.begin(), extra.end());
  args.insert(args.end(), {"--emit-only", "--out", out.string()});
  ProcessResult p = run_process(args, 120);
  if (p.exit_code != 0) throw Error("cli exited " + std::to_string(p.exit_code) + ": " + p.err);
  return read_file((out / "horn.smt2").string());
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) only.insert(argv[i]);
  const bool solver = hhtest::solver_available();
  std::cout << "solver: " << hhtest::solver_config().executable << (solver ? "" : " (not available)") << "\n";

  criterion(1, "running example has the hand-written clause shape", [](Report& r) {
    auto t0 = Clock::now();
    auto ex = hhtest::running_example();
    HornSystem h = transform(build_ksafety_scheme(ex.family, ex.spec));
    double secs = since(t0);
    record("running example", h);
    auto want = hhtest::running_example_clauses_by_hand();
    r.check(h.clauses.size() == 10, "10 clauses, got " + std::to_string(h.clauses.size()));
    std::map<ClauseRole, int> heads;
    for (const auto& p : h.provenance) heads[p.role]++;
    r.check(heads[ClauseRole::Query] == 1 && heads[ClauseRole::Bad] == 3 && heads[ClauseRole::Invalid] == 3 &&
                heads[ClauseRole::Step] == 3,
            "head distribution 1/3/3/3");
    std::map<std::string, std::string> rename{{"D_m1", "D1"}, {"D_m2", "D2"}, {"D_m3", "D12"}};
    for (size_t i = 0; i < std::min(h.clauses.size(), want.size()); ++i) {
      const HornClause& c = h.clauses[i];
      std::vector<Expr> body;
      for (const auto& b : c.body) body.push_back(b.to_expr());
      body.push_back(c.constraint);
      Expr got = implies(and_(body), c.head ? c.head->to_expr() : false_expr());
      r.check(hhtest::canonical(got, rename) == hhtest::canonical(want[i]),
              "clause " + std::to_string(i + 1) + " differs: " + print_formula(got));
    }
    r.check(secs < 1.0, "runtime " + fmt_secs(secs) + " >= 1s");
    r.note("build + transform " + fmt_secs(secs));
  });

  criterion(2, "textbook solution validates all obligations and clauses", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    auto t0 = Clock::now();
    auto ex = hhtest::running_example();
    SchemeSystem s = build_ksafety_scheme(ex.family, ex.spec);
    HornSystem h = transform(s);
    Solution fol = textbook_fol(s);
    ValidationReport rep = validate_witness(witness_from_fol(fol, s), s, hhtest::solver_config(30), 1);
    r.check(rep.obligations.size() == 9, "9 obligations");
    r.check(rep.all_valid(), std::to_string(rep.failures()) + " of 9 scheme obligations not valid");
    list_failures(r, rep);
    ValidationReport chc = validate_solution(h, solution_fol_to_chc(fol, s), hhtest::solver_config(30), 1);
    r.check(chc.obligations.size() == 10, "10 clauses");
    r.check(chc.all_valid(), std::to_string(chc.failures()) + " of 10 Horn clauses not valid under fol->chc");
    list_failures(r, chc);
    double secs = since(t0);
    r.check(secs < 30, "runtime " + fmt_secs(secs));
    // the same arbiter with Inv strengthened by two conjuncts
    Solution strong = fol;
    strong["Inv"].body = and_({fol["Inv"].body, parse_formula("(> b@1 b@2)", s.v_vocab),
                               parse_formula("(or (<= a@1 a@2) (= a@2 b@2))", s.v_vocab)});
    ValidationReport srep = validate_witness(witness_from_fol(strong, s), s, hhtest::solver_config(30), 1);
    ValidationReport schc = validate_solution(h, solution_fol_to_chc(strong, s), hhtest::solver_config(30), 1);
    r.note("with Inv && b@1 > b@2 && (a@1 <= a@2 || a@2 = b@2): " +
           std::to_string(9 - srep.failures()) + "/9 obligations and " + std::to_string(10 - schc.failures()) +
           "/10 clauses valid");
  });

  criterion(3, "squaresSum verified, concrete and with 9 predicates", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    PipelineInput abs = hhtest::load(Mode::KSafety, {"squares_sum/system.hh"}, "squares_sum/spec.hh",
                                     "squares_sum/predicates.hh");
    auto t0 = Clock::now();
    PipelineResult ra = run_pipeline(abs, options(60));
    double sa = since(t0);
    record("squaresSum abstracted", ra.horn);
    r.note("abstracted: " + verdict_of(ra) + " in " + fmt_secs(sa));
    r.check(ra.verdict && ra.verdict->kind == VerdictKind::Verified && sa < 60, "abstracted run not verified in 60s");

    PipelineInput conc = hhtest::load(Mode::KSafety, {"squares_sum/system.hh"}, "squares_sum/spec.hh");
    t0 = Clock::now();
    PipelineResult rc = run_pipeline(conc, options(300));
    double sc = since(t0);
    record("squaresSum concrete", rc.horn);
    r.note("concrete: " + verdict_of(rc) + " in " + fmt_secs(sc));
    r.check(rc.verdict && rc.verdict->kind == VerdictKind::Verified && sc < 300, "concrete run not verified in 300s");
  });

  criterion(4, "random Boolean schemes are equisatisfiable with their Horn systems", [](Report& r) {
    auto t0 = Clock::now();
    std::mt19937 rng(2024);
    int n = 0, agree = 0, sat = 0;
    for (; n < 250; ++n) {
      SchemeSystem s = hhtest::random_bool_scheme(rng);
      HornSystem h = transform(s);
      if (n < 20) record("random scheme " + std::to_string(n), h);
      hhtest::FiniteChc fs(scheme_signature(s));
      for (const auto& f : scheme_formulas(s)) fs.add(f.formula);
      hhtest::FiniteChc fh(h.signature());
      for (const auto& c : h.clauses) fh.add(c);
      bool a = fs.solve().has_value(), b = fh.solve().has_value();
      agree += a == b;
      sat += a;
      if (a != b) r.note("disagree on:\n" + s.dump());
    }
    double secs = since(t0);
    r.note(std::to_string(agree) + "/" + std::to_string(n) + " agree (" + std::to_string(sat) + " sat), " +
           fmt_secs(secs));
    r.check(agree == n, "disagreement");
    r.check(sat > 10 && n - sat > 10, "too few of one answer to be meaningful");
    r.check(secs < 120, "runtime");
  });

  criterion(5, "transformation certificates for k=2 are valid", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    auto t0 = Clock::now();
    PipelineInput in = hhtest::load(Mode::KSafety, {"squares_sum/system.hh"}, "squares_sum/spec.hh");
    PipelineOptions opt = options(60);
    opt.emit_only = true;
    opt.certify = true;
    PipelineResult res = run_pipeline(in, opt);
    size_t valid = 0;
    for (const auto& c : res.certificates) {
      if (c.result.kind == ValidityResult::Kind::Valid)
        ++valid;
      else
        r.note(c.name + " not valid: " + c.result.reason);
    }
    double secs = since(t0);
    r.note(std::to_string(valid) + "/" + std::to_string(res.certificates.size()) + " valid in " + fmt_secs(secs));
    r.check(!res.certificates.empty() && valid == res.certificates.size(), "certificates");
    r.check(secs < 60, "runtime");
  });

  criterion(6, "game-finite verdicts match the attractor oracle on mod-4 systems", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    auto t0 = Clock::now();
    std::mt19937 rng(606);
    int n = 0, match = 0, wins = 0;
    for (; n < 24; ++n) {
      hhtest::Mod4Instance m = hhtest::random_mod4_instance(rng);
      Toy t = toy(m);
      OracleResult o = game_oracle(t.family, t.spec, t.bounds);
      if (!o.trusted) r.note("instance " + std::to_string(n) + ": oracle untrusted");
      PipelineResult res = run_pipeline(PipelineInput{t.family, t.spec, Mode::GameFinite, {}, {}}, options(60));
      record("mod4 game-finite " + std::to_string(n), res.horn);
      bool decided = res.verdict && res.verdict->kind != VerdictKind::Inconclusive;
      bool verified = decided && res.verdict->kind == VerdictKind::Verified;
      if (decided && verified == o.verifier_wins() && o.trusted) {
        ++match;
      } else {
        r.note("instance " + std::to_string(n) + ": chc " + verdict_of(res) + ", oracle " +
               (o.verifier_wins() ? "verifier" : "falsifier") + "\n" + m.system + "\n" + m.spec);
      }
      wins += o.verifier_wins();
    }
    double secs = since(t0);
    r.note(std::to_string(match) + "/" + std::to_string(n) + " match (" + std::to_string(wins) +
           " verifier wins), " + fmt_secs(secs));
    r.check(match == n, "mismatch");
    r.check(wins > 0 && wins < n, "both outcomes should occur");
    r.check(secs < 600, "runtime");
  });

  criterion(7, "restricted mode: array_sum verified, verified implies verifier win", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    auto t0 = Clock::now();
    PipelineInput in = hhtest::load(Mode::GameRestricted, {"array_sum/system.hh"}, "array_sum/spec.hh",
                                    "array_sum/predicates.hh", "array_sum/restrictions.hh");
    PipelineResult res = run_pipeline(in, options(600));
    double secs = since(t0);
    record("array_sum restricted", res.horn);
    r.note("array_sum: " + verdict_of(res) + " in " + fmt_secs(secs));
    r.check(res.verdict && res.verdict->kind == VerdictKind::Verified && secs < 600, "array_sum not verified");

    std::mt19937 rng(707);
    int n = 0, verified = 0;
    for (; n < 12; ++n) {
      hhtest::Mod4Instance m = hhtest::random_mod4_instance(rng);
      Toy t = toy(m);
      OracleResult o = game_oracle(t.family, t.spec, t.bounds);
      PipelineResult rr =
          run_pipeline(PipelineInput{t.family, t.spec, Mode::GameRestricted, t.restrictions, {}}, options(60));
      record("mod4 restricted " + std::to_string(n), rr.horn);
      bool v = rr.verdict && rr.verdict->kind == VerdictKind::Verified;
      verified += v;
      r.check(!v || (o.verifier_wins() && o.trusted),
              "instance " + std::to_string(n) + " verified but oracle says falsifier\n" + m.system + "\n" + m.spec +
                  "\n" + m.restrictions);
    }
    r.note(std::to_string(verified) + "/" + std::to_string(n) + " toy instances verified, all with verifier wins");
    r.check(verified > 0, "no toy instance verified; the implication was never exercised");
  });

  criterion(8, "flipped squaresSum is violated and the oracle agrees", [&](Report& r) {
    r.check(solver, "no solver");
    if (!solver) return;
    auto t0 = Clock::now();
    PipelineInput in = hhtest::load(Mode::KSafety, {"squares_sum/system.hh"}, "squares_sum/spec_flipped.hh");
    PipelineResult res = run_pipeline(in, options(300));
    record("squaresSum flipped", res.horn);
    r.note("chc: " + verdict_of(res));
    r.check(res.verdict && res.verdict->kind == VerdictKind::Violated, "not violated");
    OracleResult o = ksafety_oracle(in.family, in.spec, parse_bounds(read_file(bench("squares_sum/bounds.hh"))));
    r.note(std::string("oracle on [1,4]: ") + (o.verifier_wins() ? "verifier" : "falsifier") +
           (o.trusted ? "" : " (untrusted)"));
    r.check(!o.verifier_wins() && o.trusted, "oracle does not confirm a falsifier win");
    double secs = since(t0);
    r.check(secs < 300, "runtime " + fmt_secs(secs));
  });

  criterion(9, "invariant suites: lint, restricted steps, schedule coverage, determinism", [&](Report& r) {
    // lint over everything emitted above
    size_t linted = 0;
    for (const auto& [name, h] : emitted) {
      if (h.clauses.empty()) continue;  // a stage failed before emission; reported by its criterion
      auto issues = lint_horn(h);
      r.check(issues.empty(), name + ": " + (issues.empty() ? "" : issues.front()));
      ++linted;
    }
    r.note("lint clean on " + std::to_string(linted) + " emitted systems");

    // delta_{M,p} has a successor from every bounded state, for every
    // universal label, schedule and restriction
    std::mt19937 rng(909);
    size_t checked = 0;
    for (int i = 0; i < 6; ++i) {
      Toy t = toy(hhtest::random_mod4_instance(rng));
      Vocabulary v = t.family.composed_vocab(2);
      Var x1 = v[0], x2 = v[1];
      Var l1 = t.family.label_var(1).value();
      SystemFamily total = t.family.totalized();
      QuantifierDomain dom = [&](const Var& q) -> std::optional<std::vector<Value>> {
        std::vector<Value> vals;
        int hi = q.name == l1.name ? 1 : 3;
        for (int k = 0; k <= hi; ++k) vals.push_back(Value::integer(k));
        return vals;
      };
      for (const auto& m : schedules(2))
        for (const auto& p : t.restrictions) {
          Expr d = delta_restricted(total, m, t.spec, p);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              for (int l = 0; l < 2; ++l) {
                bool some = false;
                for (int a2 = 0; a2 < 4 && !some; ++a2)
                  for (int b2 = 0; b2 < 4 && !some; ++b2) {
                    Assignment env;
                    env.set(x1, Value::integer(a));
                    env.set(x2, Value::integer(b));
                    env.set(l1, Value::integer(l));
                    env.set(x1.prime(), Value::integer(a2));
                    env.set(x2.prime(), Value::integer(b2));
                    some = holds(d, env, dom);
                  }
                r.check(some, "no restricted step from x@1=" + std::to_string(a) + " x@2=" + std::to_string(b) +
                                  " under " + m.to_string() + ", " + print_formula(p.predicate));
                ++checked;
              }
        }
    }
    r.note("restricted steps exist in " + std::to_string(checked) + " (state, label, schedule, restriction) cases");

    // valid_M coverage on the running example box
    auto ex = hhtest::running_example();
    const Vocabulary& v = ex.composed;
    std::vector<Expr> valid;
    for (const auto& m : schedules(2)) valid.push_back(valid_constraint(m, ex.spec));
    size_t states = 0;
    for (int a1 = 1; a1 <= 4; ++a1)
      for (int b1 = 1; b1 <= 4; ++b1)
        for (int a2 = 1; a2 <= 4; ++a2)
          for (int b2 = 1; b2 <= 4; ++b2) {
            if (a1 >= b1 && a2 >= b2) continue;  // both stuck
            Assignment env;
            int vals[6] = {a1, b1, 0, a2, b2, 3};
            for (size_t i = 0; i < 6; ++i) env.set(v[i], Value::integer(vals[i]));
            bool any = false;
            for (const auto& e : valid) any = any || holds(e, env);
            r.check(any, "no valid schedule at a1=" + std::to_string(a1) + " b1=" + std::to_string(b1) +
                             " a2=" + std::to_string(a2) + " b2=" + std::to_string(b2));
            ++states;
          }
    std::mt19937 rng2(910);
    for (int i = 0; i < 6; ++i) {
      Toy t = toy(hhtest::random_mod4_instance(rng2));
      ExplicitSystem e = enumerate(t.family.systems()[0], t.bounds);
      Vocabulary cv = t.family.composed_vocab(2);
      std::vector<Expr> vm;
      for (const auto& m : schedules(2)) vm.push_back(valid_constraint(m, t.spec));
      for (uint32_t s1 = 0; s1 < e.states.size(); ++s1)
        for (uint32_t s2 = 0; s2 < e.states.size(); ++s2) {
          if (e.stuck[s1] && e.stuck[s2]) continue;
          Assignment env = e.assignment(s1, 1);
          Assignment second = e.assignment(s2, 2);
          for (const auto& [var, val] : second.entries()) env.set(var, val);
          bool any = false;
          for (const auto& f : vm) any = any || holds(f, env);
          r.check(any, "no valid schedule in mod-4 state " + e.show(s1) + ", " + e.show(s2));
          ++states;
        }
    }
    r.note("some schedule valid in all " + std::to_string(states) + " non-stuck composed states");

    // byte-exact emission, library and CLI
    bool same = true;
    for (const auto& [name, h] : emitted)
      if (!h.clauses.empty()) same = same && emit_horn_text(h) == emit_horn_text(h);
    PipelineOptions opt = options(10);
    opt.emit_only = true;
    for (auto mode : {Mode::KSafety}) {
      auto a = run_pipeline(hhtest::load(mode, {"squares_sum/system.hh"}, "squares_sum/spec.hh"), opt).horn_text;
      auto b = run_pipeline(hhtest::load(mode, {"squares_sum/system.hh"}, "squares_sum/spec.hh"), opt).horn_text;
      same = same && a == b && !a.empty();
    }
    auto ra = run_pipeline(hhtest::load(Mode::GameRestricted, {"array_sum/system.hh"}, "array_sum/spec.hh", "",
                                        "array_sum/restrictions.hh"),
                           opt);
    auto rb = run_pipeline(hhtest::load(Mode::GameRestricted, {"array_sum/system.hh"}, "array_sum/spec.hh", "",
                                        "array_sum/restrictions.hh"),
                           opt);
    same = same && ra.horn_text == rb.horn_text;
    r.check(same, "library emission differs between runs");
    fs::path out = fs::temp_directory_path() / ("hh_accept_" + std::to_string(::getpid()));
    std::vector<std::vector<std::string>> runs = {
        {"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh")},
        {"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh"), "--predicates",
         bench("squares_sum/predicates.hh")},
        {"--mode", "forall-exists-finite", "--system", bench("squares_sum_nd/system.hh"), "--spec",
         bench("squares_sum_nd/spec.hh")},
        {"--mode", "forall-exists-restricted", "--system", bench("array_sum/system.hh"), "--spec",
         bench("array_sum/spec.hh"), "--restrictions", bench("array_sum/restrictions.hh")}};
    for (const auto& args : runs) {
      std::string first = cli_emit(args, out / "a"), second = cli_emit(args, out / "b");
      r.check(first == second && !first.empty(), "cli emission differs: " + args.back());
    }
    std::error_code ec;
    fs::remove_all(out, ec);
    r.note("emission byte-identical across repeated library and cli runs");
  });

  // smoke fixtures, verdict only
  struct Smoke {
    const char* name;
    Mode mode;
    const char* system;
    const char* spec;
    VerdictKind want;
  };
  const Smoke smoke[] = {
      {"noninterference", Mode::KSafety, "smoke/noninterference/system.hh", "smoke/noninterference/spec.hh",
       VerdictKind::Verified},
      {"leak", Mode::KSafety, "smoke/leak/system.hh", "smoke/leak/spec.hh", VerdictKind::Violated},
      {"counter monotone", Mode::KSafety, "smoke/counter/system.hh", "smoke/counter/spec_monotone.hh",
       VerdictKind::Verified},
      {"counter strict", Mode::KSafety, "smoke/counter/system.hh", "smoke/counter/spec_strict.hh",
       VerdictKind::Violated},
      {"mirror", Mode::GameFinite, "smoke/mirror/system.hh", "smoke/mirror/spec.hh", VerdictKind::Verified},
  };
  for (const auto& s : smoke) {
    if (!selected("smoke")) break;
    std::string got = "no solver";
    bool ok = false;
    if (solver) {
      try {
        PipelineResult r = run_pipeline(hhtest::load(s.mode, {s.system}, s.spec), options(120));
        got = verdict_of(r);
        ok = r.verdict && r.verdict->kind == s.want;
      } catch (const std::exception& e) {
        got = e.what();
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << " smoke " << s.name << ": want " << verdict_name(s.want) << ", got "
              << got << "\n";
    if (!ok) ++failures;
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing") << "\n";
  return failures == 0 ? 0 : 1;
}
