// The soundness fuzzing suite: every axiom schema instantiated at random
// must be valid in every random model; modus ponens and the five
// necessitation rules must preserve validity-in-a-model.  A violation is
// shrunk by halving the model and the instantiation before reporting.
//
// The mutation hook deliberately corrupts one schema's generator so the
// suite's detection path stays tested.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptel/axioms.hpp"
#include "ptel/gen.hpp"

namespace ptel {

enum class Mutation {
  None,
  AKRUnguarded,   // K[a]x -> x without the activity guard
  AGP2Flipped,    // Pr<=r x -> Pr<t x with t < r
  AXZReversed,    // Z X a <-> a  (fails at time 0)
};
std::optional<Mutation> mutation_from_name(const std::string& s);

struct SoundnessConfig {
  GenParams gen;
  int models = 200;
  int instances_per_model = 5;
  Mutation mutate = Mutation::None;
};

struct SoundnessViolation {
  std::string schema;
  std::string formula;       // printed instance
  std::string model_json;    // shrunk countermodel
  std::uint32_t run = 0;
  std::uint64_t time = 0;
};

struct SoundnessReport {
  std::vector<std::pair<std::string, int>> trials;  // schema -> instance count
  std::vector<SoundnessViolation> violations;
  int rule_checks = 0;
  std::vector<std::string> rule_violations;
  bool ok() const { return violations.empty() && rule_violations.empty(); }
  std::string text() const;
  std::string json() const;
};

SoundnessReport run_soundness(const SoundnessConfig& cfg);

}  // namespace ptel
