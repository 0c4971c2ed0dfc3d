// Finitely presented models: ultimately periodic runs, canonical worlds,
// per-agent accessibility, exact rational run-measures and per-(world,agent)
// probability spaces.
//
// A run assigns a valuation to every time n via stem/loop folding; the pair
// (run, n) is a possible world.  Worlds with n < stem+loop are canonical;
// canon() folds every world onto its canonical representative.
// Accessibility, run-measures and agent spaces attach to canonical worlds
// and lift periodically to all concrete worlds.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ptel/formula.hpp"
#include "ptel/rational.hpp"

namespace ptel {

struct Run {
  std::vector<std::set<std::string>> stem;  // length p >= 0
  std::vector<std::set<std::string>> loop;  // length l >= 1

  std::size_t stem_len() const { return stem.size(); }
  std::size_t loop_len() const { return loop.size(); }
  std::size_t period_worlds() const { return stem.size() + loop.size(); }

  const std::set<std::string>& valuation(std::uint64_t n) const {
    if (n < stem.size()) return stem[n];
    return loop[(n - stem.size()) % loop.size()];
  }
};

// Canonical world: run index plus a position below stem+loop of that run.
struct WorldId {
  std::uint32_t run = 0;
  std::uint32_t pos = 0;
  auto operator<=>(const WorldId&) const = default;
};

// The concrete times mapping onto one canonical world: a single stem time,
// or the arithmetic progression first, first+step, ... for loop positions.
struct SingleTime {
  std::uint64_t time;
};
struct Progression {
  std::uint64_t first;
  std::uint64_t step;
};
using Instances = std::variant<SingleTime, Progression>;

// One sample point of an agent probability space: a concrete world whose
// time is unbounded (it need not be canonical).
struct Sample {
  std::uint32_t run = 0;
  std::uint64_t time = 0;
  Rat weight;
};

struct Violation {
  std::string code;
  std::string detail;
};

class Model {
 public:
  AgentSignature sig;
  std::vector<std::string> atoms;  // universe, activity atoms included
  std::vector<Run> runs;
  // access[agent][world index] = sorted canonical successors (world indexes).
  std::vector<std::vector<std::vector<std::uint32_t>>> access;
  // run_measure[world index][run index] = weight.
  std::vector<std::vector<Rat>> run_measure;
  // agent_space[world index][agent] = samples.
  std::vector<std::vector<std::vector<Sample>>> agent_space;

  // Dense canonical world indexing.
  void reindex();  // recompute offsets after runs change
  std::size_t world_count() const { return total_worlds_; }
  std::uint32_t world_index(WorldId w) const { return offsets_[w.run] + w.pos; }
  WorldId world_at(std::uint32_t idx) const;

  WorldId canon(std::uint32_t run, std::uint64_t n) const {
    const Run& r = runs[run];
    if (n < r.period_worlds()) return {run, static_cast<std::uint32_t>(n)};
    std::uint64_t p = r.stem_len();
    return {run, static_cast<std::uint32_t>(p + (n - p) % r.loop_len())};
  }

  Instances instances(WorldId w) const {
    const Run& r = runs[w.run];
    if (w.pos < r.stem_len()) return SingleTime{w.pos};
    return Progression{w.pos, r.loop_len()};
  }

  bool active(const std::string& agent, WorldId w) const {
    return runs[w.run].valuation(w.pos).count(activity_atom(agent)) > 0;
  }

  bool lifted_access(std::size_t agent_idx, std::uint32_t r1, std::uint64_t n1,
                     std::uint32_t r2, std::uint64_t n2) const;

  // All Definition-level conditions: non-empty run set, loop lengths,
  // valuations within the atom universe, symmetric and transitive relations,
  // dead ends at inactive worlds, self-loops and target activity at active
  // worlds, exactly normalized measures, non-empty sample sets.
  std::vector<Violation> validate() const;

 private:
  std::vector<std::uint32_t> offsets_;
  std::size_t total_worlds_ = 0;
};

}  // namespace ptel
