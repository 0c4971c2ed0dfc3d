// Bundled machine-checkable artifacts:
//
//  - example1: the probabilistic inconsistency derivation; from the theory
//    {Pr<=1/k aa : 1 <= k <= 100} + {~Pr=0 aa} it derives the contradiction
//    Pr=0 aa & ~Pr=0 aa through an Archimedean-rule application, checking
//    as VerifiedBounded(100).
//  - agpz-chain / nec-chain: small finitary derivations covering modus
//    ponens and all five necessitation rules.
//  - ru-theorem, rs-theorem, rc-theorem, rga-theorem, ra-theorem: one
//    theorem-level use of each countable-premise rule, premises derived
//    rather than assumed.
//  - non-compactness witnesses: for each family and each k, a finite model
//    and world satisfying the k-th finite subset of a set that has no model
//    as a whole.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptel/model.hpp"
#include "ptel/proof.hpp"

namespace ptel {

std::map<std::string, Proof> bundled_proofs();

struct Witness {
  std::string family;  // "next", "common", "prob"
  int k = 0;
  Model model;
  std::vector<Formula> formulas;
  std::uint32_t run = 0;
  std::uint64_t time = 0;
};

// family in {"next", "common", "prob"}; throws std::invalid_argument else.
Witness make_witness(const std::string& family, int k);

}  // namespace ptel
