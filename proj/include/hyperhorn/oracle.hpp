#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperhorn/eval.hpp"
#include "hyperhorn/system.hpp"

namespace hyperhorn {

// Per-variable ranges, keyed by the copy-free variable name.
struct VarBounds {
  int64_t lo = 0;
  int64_t hi = 0;
  // arrays: stored index range; lo/hi then bound the elements
  std::optional<std::pair<int64_t, int64_t>> index;
};

struct Bounds {
  std::map<std::string, VarBounds> vars;
  // range for labels without a finite domain
  std::optional<std::pair<int64_t, int64_t>> label;
  size_t max_states = 200000;
  // margin of the widened box used when cut detection cannot be symbolic
  int64_t widen = 3;
};

// (bounds (a 0 3) (A (index 0 2) (elem 0 3)) (label 0 1) (max-states 1000))
Bounds parse_bounds(std::string_view text);

// Bounded explicit transition relation of one (untotalized) system. Missing
// successors are totalized here: a state with no successor for any label and
// no transition leaving the box stutters.
struct ExplicitSystem {
  static constexpr uint32_t kSink = UINT32_MAX;

  Vocabulary vocab;
  std::optional<Var> label;
  std::vector<std::vector<Value>> states;  // values in vocab order
  std::vector<Value> labels;               // a single dummy when unlabeled
  // succ[s][l]; kSink marks transitions that leave the box
  std::vector<std::vector<std::vector<uint32_t>>> succ;
  std::vector<bool> initial;
  std::vector<bool> stuck;
  // some transition leaves the box / could not be decided
  std::vector<std::vector<bool>> cut;
  std::vector<std::vector<bool>> uncertain;
  // labels outside the enumerated label range are enabled
  std::vector<bool> label_cut;
  std::vector<bool> label_uncertain;

  Assignment assignment(uint32_t s, int copy = 0) const;
  std::string show(uint32_t s) const;
};

ExplicitSystem enumerate(const TransitionSystem& ts, const Bounds& bounds);

// Verification game: falsifier nodes are composed states; the falsifier picks
// universal labels, the verifier a valid schedule and existential labels, the
// falsifier a successor. Node 0 is a verifier-safe sink.
struct ExplicitGame {
  struct ChoiceNode {
    uint32_t mask = 0;
    std::vector<uint32_t> exists_labels;  // label indices of traces l+1..k
    std::vector<uint32_t> succ;           // falsifier nodes
  };
  struct VerifierNode {
    uint32_t falsifier = 0;
    std::vector<uint32_t> forall_labels;  // label indices of traces 1..l
    std::vector<ChoiceNode> choices;
  };

  int k = 0;
  int l = 0;
  std::vector<std::vector<uint32_t>> states;  // per falsifier node, one index per trace
  std::vector<bool> bad;
  std::vector<bool> initial;
  std::vector<std::vector<uint32_t>> moves;  // falsifier node -> verifier nodes
  std::vector<VerifierNode> verifier;

  bool cut = false;        // a reached transition was redirected to the sink
  bool uncertain = false;  // a reached transition could not be decided
  bool forall_label_cut = false;
  bool exists_label_cut = false;
  std::vector<std::string> notes;
};

ExplicitGame build_explicit_game(const SystemFamily& family, const HyperSpec& spec,
                                 const Bounds& bounds);

struct OracleResult {
  enum class Winner { Verifier, Falsifier };
  Winner winner = Winner::Verifier;
  // falsifier wins are trusted unless the verifier was restricted; verifier
  // wins only when nothing was cut
  bool trusted = true;
  size_t falsifier_nodes = 0;
  size_t verifier_nodes = 0;
  size_t attractor_size = 0;
  // verifier node -> index of a choice staying outside the attractor
  std::map<uint32_t, uint32_t> strategy;
  std::vector<std::string> notes;

  bool verifier_wins() const { return winner == Winner::Verifier; }
};

OracleResult solve_attractor(const ExplicitGame& game);

OracleResult game_oracle(const SystemFamily& family, const HyperSpec& spec, const Bounds& bounds);
// k-safety as the game with no existential labels
OracleResult ksafety_oracle(const SystemFamily& family, const HyperSpec& spec,
                            const Bounds& bounds);

}  // namespace hyperhorn
