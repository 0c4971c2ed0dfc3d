// Seeded random generation of models, formulas, axiom instances and small
// proofs.  Everything is a pure function of (seed, params): fixed seeds
// reproduce byte-identical artifacts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptel/axioms.hpp"
#include "ptel/formula.hpp"
#include "ptel/model.hpp"
#include "ptel/proof.hpp"

namespace ptel {

// splitmix64; stable across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  int range(int lo, int hi) {  // inclusive
    if (hi <= lo) return lo;
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(int pct) { return static_cast<int>(below(100)) < pct; }
};

struct GenParams {
  std::uint64_t seed = 0;
  int min_runs = 1, max_runs = 3;
  int max_stem = 2;
  int min_loop = 1, max_loop = 3;
  int agent_count = 2;  // capped at 4
  int atom_count = 3;   // capped at 6
  int edge_density_pct = 40;
  int min_depth = 0, max_depth = 4;
  int max_denominator = 6;
};

AgentSignature gen_signature(const GenParams& p);
std::vector<std::string> gen_atoms(const GenParams& p);

// Always passes Model::validate().
Model gen_model(const GenParams& p);

Formula gen_formula(Rng& rng, const GenParams& p, const AgentSignature& sig,
                    const std::vector<std::string>& atoms);
Formula gen_formula(Rng& rng, const GenParams& p, const AgentSignature& sig,
                    const std::vector<std::string>& atoms, int depth);

Rat gen_threshold(Rng& rng, const GenParams& p);

// Bindings honoring the schema's side conditions; matchAxiom recognizes the
// expanded instance under the same id.
AxiomInstanceSpec gen_axiom_spec(AxiomId id, Rng& rng, const GenParams& p,
                                 const AgentSignature& sig,
                                 const std::vector<std::string>& atoms);
Formula gen_axiom_instance(AxiomId id, Rng& rng, const GenParams& p, const AgentSignature& sig,
                           const std::vector<std::string>& atoms);

// Small checking proofs for exercising the proof transformers.  The proof
// derives its last step's formula from theory + {alpha}; when with_inf is
// set it contains at least one infinitary step whose premises are
// hypotheses (so the step is rebuilt rather than copied by the
// transformers).
struct GeneratedProof {
  Proof proof;
  Formula alpha;
};
GeneratedProof gen_proof(Rng& rng, const GenParams& p, bool with_inf);

}  // namespace ptel
