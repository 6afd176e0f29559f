#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>

#include "hyperhorn/formula_io.hpp"

#ifndef HH_SOURCE_DIR
#error "HH_SOURCE_DIR must point at the source tree"
#endif

namespace hhtest {

using namespace hyperhorn;

std::string bench(const std::string& rel) { return std::string(HH_SOURCE_DIR) + "/benchmarks/" + rel; }

SolverConfig solver_config(double timeout_seconds) {
  SolverConfig c = SolverConfig::from_env();
  c.timeout_seconds = timeout_seconds;
  return c;
}

bool solver_available() {
  static int cached = -1;
  if (cached < 0) {
    try {
      ValidityResult r = check_validity(true_expr(), solver_config(10));
      cached = r.kind == ValidityResult::Kind::Valid ? 1 : 0;
    } catch (const std::exception&) {
      cached = 0;
    }
  }
  return cached == 1;
}

PipelineInput load(Mode mode, const std::vector<std::string>& systems, const std::string& spec,
                   const std::string& predicates, const std::string& restrictions) {
  InputFiles f;
  for (const auto& s : systems) f.systems.push_back(bench(s));
  f.spec = bench(spec);
  if (!predicates.empty()) f.predicates = bench(predicates);
  if (!restrictions.empty()) f.restrictions = bench(restrictions);
  return load_input(f, mode);
}

RunningExample running_example(const std::string& spec_file) {
  RunningExample r;
  r.family = SystemFamily(parse_system(read_file(bench("squares_sum/system.hh"))));
  r.spec = parse_spec(read_file(bench(spec_file)), r.family);
  r.composed = r.family.composed_vocab(2);
  return r;
}

std::vector<Expr> running_example_clauses_by_hand() {
  Vocabulary v = running_example().composed;
  Vocabulary all = concat(v, v.primed());
  Signature d;
  for (const char* name : {"D1", "D2", "D12"}) d[name] = std::vector<Sort>(6, Sort::integer());

  const std::string V = "a@1 b@1 c@1 a@2 b@2 c@2";
  const std::string Vp = "a@1' b@1' c@1' a@2' b@2' c@2'";
  auto doomed_all = [&](const std::string& args) {
    return "(D1 " + args + ") (D2 " + args + ") (D12 " + args + ")";
  };
  auto tr = [](const std::string& i) {
    std::string a = "a@" + i, b = "b@" + i, c = "c@" + i;
    return "(or (and (< " + a + " " + b + ") (= " + c + "' (+ " + c + " (* " + a + " " + a + "))) (= " + a +
           "' (+ " + a + " 1)) (= " + b + "' " + b + "))" + " (and (>= " + a + " " + b + ") (= " + a + "' " + a +
           ") (= " + b + "' " + b + ") (= " + c + "' " + c + ")))";
  };
  auto frame = [](const std::string& i) {
    return "(= a@" + i + " a@" + i + "') (= b@" + i + " b@" + i + "') (= c@" + i + " c@" + i + "')";
  };
  const std::string init1 = "(> a@1 0) (> b@1 a@1) (= c@1 0)";
  const std::string init2 = "(> a@2 0) (> b@2 a@2) (= c@2 0)";
  const std::string bad = "(not (=> (and (>= a@1 b@1) (>= a@2 b@2)) (> c@1 c@2)))";

  std::vector<std::string> text = {
      "(=> (and " + doomed_all(V) + " " + init1 + " " + init2 + " (> a@2 a@1) (< b@2 b@1)) false)",
      "(=> " + bad + " (D1 " + V + "))",
      "(=> " + bad + " (D2 " + V + "))",
      "(=> " + bad + " (D12 " + V + "))",
      "(=> (not (< a@1 b@1)) (D1 " + V + "))",
      "(=> (not (< a@2 b@2)) (D2 " + V + "))",
      "(=> (and (not (and (< a@1 b@1) (< a@2 b@2))) (not (and (>= a@1 b@1) (>= a@2 b@2)))) (D12 " + V + "))",
      "(=> (and " + doomed_all(Vp) + " " + tr("1") + " " + frame("2") + ") (D1 " + V + "))",
      "(=> (and " + doomed_all(Vp) + " " + frame("1") + " " + tr("2") + ") (D2 " + V + "))",
      "(=> (and " + doomed_all(Vp) + " " + tr("1") + " " + tr("2") + ") (D12 " + V + "))",
  };
  std::vector<Expr> out;
  for (const auto& t : text) out.push_back(parse_formula(t, all, d));
  return out;
}

std::map<std::string, Expr> textbook_solution() {
  Vocabulary v = running_example().composed;
  std::map<std::string, Expr> s;
  s["A1"] = parse_formula("(or (< a@1 a@2) (and (<= b@2 a@1) (< a@1 b@1)))", v);
  s["A2"] = parse_formula("false", v);
  s["A12"] = parse_formula("(or (and (= a@1 a@2) (< a@1 b@2)) (>= a@1 b@1))", v);
  s["Inv"] = parse_formula(
      "(and (< 0 a@1) (<= a@1 b@1) (< 0 a@2) (<= a@2 b@2)"
      " (or (and (< a@1 a@2) (>= c@1 c@2)) (and (>= a@1 a@2) (> c@1 c@2))))",
      v);
  return s;
}

}  // namespace hhtest
