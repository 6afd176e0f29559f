#include <gtest/gtest.h>

#include <array>

#include "fixtures.hpp"
#include "hyperhorn/eval.hpp"
#include "hyperhorn/oracle.hpp"
#include "hyperhorn/system.hpp"

using namespace hyperhorn;
using hhtest::bench;

namespace {

TransitionSystem squares() { return parse_system(read_file(bench("squares_sum/system.hh"))); }

Var I(const std::string& n, bool primed = false) { return Var(n, Sort::integer(), 0, primed); }

// successors of (a, b, c) under tr, searched in a small window
std::vector<std::array<int, 3>> successors(const Expr& tr, int a, int b, int c) {
  std::vector<std::array<int, 3>> out;
  for (int a2 = -1; a2 <= 6; ++a2)
    for (int b2 = -1; b2 <= 6; ++b2)
      for (int c2 = 0; c2 <= 40; ++c2) {
        Assignment env;
        env.set(I("a"), Value::integer(a));
        env.set(I("b"), Value::integer(b));
        env.set(I("c"), Value::integer(c));
        env.set(I("a", true), Value::integer(a2));
        env.set(I("b", true), Value::integer(b2));
        env.set(I("c", true), Value::integer(c2));
        if (holds(tr, env)) out.push_back({a2, b2, c2});
      }
  return out;
}

}  // namespace

TEST(Parse, SquaresSum) {
  TransitionSystem ts = squares();
  EXPECT_EQ(ts.vocab.size(), 3u);
  EXPECT_FALSE(ts.label.has_value());
  EXPECT_TRUE(ts.finite_labels());
  EXPECT_FALSE(ts.totalized);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_system("(system (vars (a Int)) (tr (= b' a)))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a Int) (a Int)) (tr true))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a Int)))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a Int)) (tr true) (tr true))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a Int)) (label (a Int)) (tr true))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a Int)) (label (l Int) (domain 0 0)) (tr true))"), ParseError);
  EXPECT_THROW(parse_system("(system (vars (a@1 Int)) (tr true))"), ParseError);
}

TEST(Totalize, StuckStatesSelfLoop) {
  TransitionSystem t = totalize(squares());
  EXPECT_TRUE(t.totalized);
  // a >= b: only the self loop
  auto s = successors(t.tr, 3, 3, 7);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (std::array<int, 3>{3, 3, 7}));
  s = successors(t.tr, 5, 2, 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (std::array<int, 3>{5, 2, 0}));
  // a < b: the original step, no self loop
  s = successors(t.tr, 2, 4, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (std::array<int, 3>{3, 4, 5}));
}

TEST(Totalize, FalseBecomesIdentity) {
  TransitionSystem ts = parse_system("(system (vars (a Int) (b Int)) (tr false))");
  TransitionSystem t = totalize(ts);
  Vocabulary v = ts.tr_vocab();
  for (int a = 0; a < 3; ++a)
    for (int a2 = 0; a2 < 3; ++a2) {
      Assignment env;
      env.set(I("a"), Value::integer(a));
      env.set(I("b"), Value::integer(1));
      env.set(I("a", true), Value::integer(a2));
      env.set(I("b", true), Value::integer(1));
      EXPECT_EQ(holds(t.tr, env), a == a2);
    }
}

TEST(Totalize, AlreadyTotalUnchangedOnBoundedStates) {
  TransitionSystem ts = parse_system(
      "(system (vars (x Int)) (label (l Int) (domain 0 1))"
      " (tr (or (and (= l 0) (= x' x)) (and (= l 1) (= x' (ite (< x 3) (+ x 1) 0))))))");
  TransitionSystem t = totalize(ts);
  Bounds b = parse_bounds("(bounds (x 0 3))");
  ExplicitSystem e1 = enumerate(ts, b);
  ExplicitSystem e2 = enumerate(t, b);
  ASSERT_EQ(e1.states, e2.states);
  EXPECT_EQ(e1.succ, e2.succ);
}

TEST(Totalize, LabelDomainRespected) {
  // label 2 is outside the domain, so x = 0 is stuck even though Tr allows l = 2
  TransitionSystem ts = parse_system(
      "(system (vars (x Int)) (label (l Int) (domain 0 1)) (tr (and (= x 0) (= l 2) (= x' 1))))");
  TransitionSystem t = totalize(ts);
  Assignment env;
  env.set(I("x"), Value::integer(0));
  env.set(Var("l", Sort::integer()), Value::integer(0));
  env.set(I("x", true), Value::integer(0));
  EXPECT_TRUE(holds(t.tr, env));
  env.set(Var("l", Sort::integer()), Value::integer(2));
  env.set(I("x", true), Value::integer(1));
  EXPECT_FALSE(holds(t.tr, env));
}

TEST(Determinism, QueryShape) {
  Expr q = determinism_query(squares());
  EXPECT_GE(free_vars(q).size(), 9u);  // V, V', V''
}

class DeterminismWithSolver : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!hhtest::solver_available()) GTEST_SKIP() << "no solver";
  }
};

TEST_F(DeterminismWithSolver, SquaresSumDeterministic) {
  DeterminismResult d = check_determinism(squares(), hhtest::solver_config());
  EXPECT_EQ(d.kind, DeterminismResult::Kind::Deterministic) << d.reason;
  // cross-check by enumeration on a, b, c in [0, 4]
  ExplicitSystem e = enumerate(squares(), parse_bounds("(bounds (a 0 4) (b 0 4) (c 0 4))"));
  for (const auto& per_label : e.succ)
    for (const auto& s : per_label) EXPECT_LE(s.size(), 1u);
}

TEST_F(DeterminismWithSolver, IdentityDeterministic) {
  TransitionSystem ts = parse_system("(system (vars (x Int) (y Int)) (tr (and (= x' x) (= y' y))))");
  EXPECT_EQ(check_determinism(ts, hhtest::solver_config()).kind, DeterminismResult::Kind::Deterministic);
}

TEST_F(DeterminismWithSolver, ArraySumDeterministicButNotWithUnreadLabel) {
  std::string text = read_file(bench("array_sum/system.hh"));
  EXPECT_EQ(check_determinism(parse_system(text), hhtest::solver_config()).kind,
            DeterminismResult::Kind::Deterministic);
  // line 13 picks y without reading the label
  auto pos = text.find("(= y' l)");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 8, "true");
  DeterminismResult d = check_determinism(parse_system(text), hhtest::solver_config());
  ASSERT_EQ(d.kind, DeterminismResult::Kind::Nondeterministic);
  EXPECT_EQ(d.witness.at("pc"), "13");
}

TEST(Spec, ParseAndValidate) {
  SystemFamily fam(squares());
  HyperSpec s = parse_spec(read_file(bench("squares_sum/spec.hh")), fam);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.l, 2);
  EXPECT_TRUE(s.is_ksafety());
  EXPECT_EQ(s.obs.size(), 2u);
  EXPECT_TRUE(validate_spec(fam, s).empty());

  EXPECT_THROW(parse_spec("(spec (forall 0))", fam), ParseError);
  EXPECT_THROW(parse_spec("(spec (forall 2) (observe 3 true))", fam), ParseError);
  EXPECT_THROW(parse_spec("(spec (forall 2) (global (> a 0)))", fam), ParseError);      // needs copies
  EXPECT_THROW(parse_spec("(spec (forall 2) (observe 1 (> a@1 0)))", fam), ParseError);  // copy-free only
  EXPECT_THROW(parse_spec("(spec (forall 1) (global (> a@2 0)))", fam), ParseError);     // copy out of range
}

TEST(Spec, FamilySizeMustMatch) {
  std::vector<TransitionSystem> three(3, squares());
  SystemFamily fam(three);
  EXPECT_THROW(parse_spec("(spec (forall 2))", fam), ParseError);
  EXPECT_NO_THROW(parse_spec("(spec (forall 2) (exists 1))", fam));
}

TEST(Spec, ValidateReportsHandBuiltProblems) {
  SystemFamily fam(squares());
  HyperSpec s;
  s.k = 2;
  s.l = 3;
  s.obs = {true_expr(), true_expr()};
  EXPECT_FALSE(validate_spec(fam, s).empty());
  s.l = 1;
  s.phi = gt(var_expr(I("a")), int_lit(0));  // no copy index
  auto d = validate_spec(fam, s);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NE(d[0].find("copy"), std::string::npos) << d[0];
}
