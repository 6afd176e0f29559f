#include "hyperhorn/witness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hyperhorn {

namespace {

std::vector<Expr> as_args(const Vocabulary& v) {
  std::vector<Expr> out;
  for (const auto& x : v) out.push_back(var_expr(x));
  return out;
}

}  // namespace

Witness witness_from_fol(const Solution& fol, const SchemeSystem& scheme) {
  Witness w;
  w.mode = scheme.mode;
  w.as_solution = fol;
  Expr inv = apply_pred(scheme.inv_name(), as_args(scheme.v_vocab));
  w.invariant = instantiate(inv, fol);
  w.invariant_quantified = contains_quantifier(w.invariant) && !scheme.w_vocab.empty();
  Vocabulary vw = concat(scheme.v_vocab, scheme.w_vocab);
  for (size_t u = 0; u < scheme.choices.size(); ++u)
    w.arbiter.emplace_back(scheme.choices[u],
                           instantiate(apply_pred(scheme.arbiter_name(u), as_args(vw)), fol));
  return w;
}

Witness reconstruct_witness(const Solution& d_solution, const SchemeSystem& scheme) {
  return witness_from_fol(solution_chc_to_fol(d_solution, scheme), scheme);
}

std::vector<CheckedQuery> check_queries(const std::vector<ValidityQuery>& queries,
                                        const SolverConfig& config, int jobs) {
  std::vector<CheckedQuery> out(queries.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < queries.size(); i = next.fetch_add(1)) {
      out[i].name = queries[i].name;
      out[i].formula = queries[i].formula;
      try {
        out[i].result = check_validity(queries[i].formula, config, queries[i].uninterpreted);
      } catch (const Error& e) {
        out[i].result.kind = ValidityResult::Kind::Unknown;
        out[i].result.reason = e.what();
      }
    }
  };
  size_t n = std::clamp<size_t>(static_cast<size_t>(std::max(jobs, 1)), 1, std::max<size_t>(queries.size(), 1));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

bool ValidationReport::all_valid() const { return failures() == 0; }

size_t ValidationReport::failures() const {
  size_t n = 0;
  for (const auto& o : obligations) n += o.result.kind == ValidityResult::Kind::Valid ? 0 : 1;
  return n;
}

ValidationReport validate_witness(const Witness& w, const SchemeSystem& scheme,
                                  const SolverConfig& config, int jobs) {
  std::vector<ValidityQuery> qs;
  for (const auto& f : scheme_formulas(scheme))
    qs.push_back({f.role, instantiate(f.formula, w.as_solution), {}});
  return ValidationReport{check_queries(qs, config.with_mode(SolverConfig::Mode::CheckValidity), jobs)};
}

ValidationReport validate_solution(const HornSystem& horn, const Solution& sol,
                                   const SolverConfig& config, int jobs) {
  std::vector<ValidityQuery> qs;
  for (size_t i = 0; i < horn.clauses.size(); ++i) {
    std::string name = "clause " + std::to_string(i + 1) + " (" + role_name(horn.provenance[i].role) + ")";
    qs.push_back({name, instantiate(horn.clauses[i].to_formula(), sol), {}});
  }
  return ValidationReport{check_queries(qs, config.with_mode(SolverConfig::Mode::CheckValidity), jobs)};
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Verified:
      return "verified";
    case VerdictKind::Violated:
      return "violated";
    case VerdictKind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict decide_verdict(const SolverOutcome& outcome, Mode mode, bool abstracted) {
  Verdict v;
  switch (outcome.kind) {
    case SolverOutcome::Kind::Sat:
      v.kind = VerdictKind::Verified;
      break;
    case SolverOutcome::Kind::Unsat:
      if (abstracted) {
        v.reason = "unsatisfiable under predicate abstraction; abstraction or restriction incomplete";
      } else if (mode == Mode::GameRestricted) {
        v.reason = "unsatisfiable with restrictions; abstraction or restriction incomplete";
      } else {
        v.kind = VerdictKind::Violated;
        if (mode == Mode::GameFinite)
          v.reason = "the falsifier wins the verification game; game semantics is incomplete for the trace semantics";
      }
      break;
    case SolverOutcome::Kind::Unknown:
      v.reason = outcome.reason.empty() ? "solver answered unknown" : outcome.reason;
      break;
    case SolverOutcome::Kind::Timeout:
      v.reason = outcome.reason.empty() ? "solver timeout" : outcome.reason;
      break;
  }
  return v;
}

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Verified:
      return 0;
    case VerdictKind::Violated:
      return 1;
    case VerdictKind::Inconclusive:
      return 2;
  }
  return 4;
}

}  // namespace hyperhorn
