// Proof file serialization.  A proof is a single JSON document:
//
// {
//   "agents": [...],
//   "theory": ["formula", ...],
//   "bound": N,
//   "steps": [
//     {"id":"s1","kind":"axiom","formula":"...","axiom":"AGP1"?},
//     {"id":"s2","kind":"hyp","formula":"..."},
//     {"id":"s3","kind":"mp","from":["s1","s2"],"formula":"..."},
//     {"id":"s4","kind":"nec","rule":"RXN"|"RZN"|"RKN"|"RGPN"|"RPN",
//      "agent":"a"?,"from":["s3"],"formula":"..."},
//     {"id":"s5","kind":"inf","rule":"RU"|"RS"|"RC"|"RGA"|"RA",
//      "ctx":{"k":K,"B":["...",...],"X":["X"|"Z"|"K[a]",...]},
//      "alpha":"...","beta":"..."?,"agent":"a"?,"r":"num/den"?,
//      "bound":N?,"premises":{"0":"s1",...},"formula":"..."}
//   ]
// }
//
// Formulas are written in the concrete grammar.
#pragma once

#include <stdexcept>
#include <string>

#include "ptel/proof.hpp"

namespace ptel {

struct ProofFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Proof proof_from_json(const std::string& text);
std::string proof_to_json(const Proof& p);

Proof load_proof_file(const std::string& path);

}  // namespace ptel
