// Exact evaluation over a validated model.  Truth sets of core formulas
// along each run are ultimately periodic and are computed bottom-up with
// memoization per (run, subformula).
//
// Knowledge quantifies over the concrete instances of canonically
// accessible worlds; a world whose agent is inactive is a dead end, so
// K[a] holds there vacuously.  Common knowledge is decided by graph
// reachability over the union of all agents' canonical relations.  Run
// probabilities sum the measure weights of the runs whose initial world
// satisfies the operand; agent probabilities sum sample weights at the
// samples' concrete times.  All comparisons are exact.
#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ptel/model.hpp"
#include "ptel/syntax.hpp"
#include "ptel/upset.hpp"

namespace ptel {

class Evaluator {
 public:
  explicit Evaluator(const Model& m);

  const Model& model() const { return *m_; }

  // Truth set of a core formula along one run.
  const UPSet& truth_set(std::uint32_t run, const Formula& core);

  // Surface formulas are expanded on entry.
  bool holds(std::uint32_t run, std::uint64_t time, const Formula& f);
  bool holds_core(std::uint32_t run, std::uint64_t time, const Formula& core);

  // core holds at every concrete world folding onto w.
  bool holds_at_all_instances(WorldId w, const Formula& core);

  // core holds at (run,time) and at every instance of every canonical world
  // reachable in >= 1 steps through the union of the agents' relations.
  bool common_holds(std::uint32_t run, std::uint64_t time, const Formula& core);

  Rat run_probability(WorldId w, const Formula& core);
  Rat agent_probability(WorldId w, std::size_t agent_idx, const Formula& core);

  bool valid_in_model(const Formula& f);
  bool consequence_in_model(std::span<const Formula> theory, const Formula& f);

  // First world (in run-major order) where all of `theory` holds and `f`
  // fails, if any.
  struct WorldRef {
    std::uint32_t run;
    std::uint64_t time;
  };
  std::optional<WorldRef> find_consequence_failure(std::span<const Formula> theory,
                                                   const Formula& f);

  // Canonical worlds reachable from w in >= 1 steps (union of all agents).
  const std::vector<bool>& reachable_from(std::uint32_t world_idx);

 private:
  UPSet compute(std::uint32_t run, const Formula& core);
  UPSet canon_bits(std::uint32_t run, const std::vector<bool>& by_world);

  struct Key {
    std::uint32_t run;
    Formula f;
    bool operator==(const Key& o) const { return run == o.run && f == o.f; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.f.hash() * 1000003u + k.run; }
  };

  const Model* m_;
  std::unordered_map<Key, UPSet, KeyHash> memo_;
  std::vector<std::vector<bool>> reach_;  // lazily filled per world
  std::vector<bool> reach_done_;
};

}  // namespace ptel
