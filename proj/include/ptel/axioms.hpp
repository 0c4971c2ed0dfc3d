// The axiom schemas of the proof system, grouped as: propositional (Prop),
// time (AXNot .. AOZ), knowledge (AKImp .. ACE), probability on runs
// (AGP1 .. AGPZ) and probability on possible worlds (AP1 .. AP5).
//
// Matching is performed on abbreviation-expanded core formulas; the primed
// threshold-axiom variants are contrapositive spellings of the unprimed
// schemas, so each matcher accepts both shapes under the unprimed id.
// Prop instances are decided by a truth table over the propositional
// abstraction (maximal non-boolean subformulas become fresh variables).
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptel/formula.hpp"

namespace ptel {

enum class AxiomId : std::uint8_t {
  Prop,
  AXNot,   // ~X a <-> X ~a
  AXImp,   // X(a -> b) -> (X a -> X b)
  AUX,     // a U b <-> b | (a & X(a U b))
  AUF,     // a U b -> F b
  AZNot,   // ~Z ~a -> Z a
  AZImp,   // Z(a -> b) -> (Z a -> Z b)
  AZAnd,   // (Z a & Z b) -> Z(a & b)
  AXZ,     // X Z a <-> a
  AXZC1,   // X Z a -> Z X a
  AXZC2,   // ~Z(g & ~g) -> (X Z a <-> Z X a)
  ASZ,     // a S b <-> b | (~Z(a & ~a) & (a & Z(a S b)))
  AOZ,     // O Z b
  AKImp,   // K[a](x -> y) -> (K[a]x -> K[a]y)
  AKR,     // active(a) -> (K[a]x -> x)
  AKA,     // active(a) -> K[a]active(a)
  AKDE,    // ~active(a) -> K[a](x & ~x)
  AKS,     // K[a]~x -> K[a]~K[a]x
  AKT,     // K[a]x -> K[a]K[a]x
  ACE,     // C x -> E^m x,  m in N
  AGP1,    // Pr>=0 x
  AGP2,    // Pr<=r x -> Pr<t x,  t > r
  AGP3,    // Pr<t x -> Pr<=t x
  AGP4,    // (Pr>=r x & Pr>=t y & Pr>=1 ~(x&y)) -> Pr>=min(1,r+t) (x|y)
  AGP5,    // (Pr<=r x & Pr<t y) -> Pr<r+t (x|y),  r+t <= 1
  AGPZ,    // Pr>=1 Z(x & ~x)
  AP1,
  AP2,
  AP3,
  AP4,
  AP5,
};

inline constexpr std::size_t kAxiomCount = 31;

const char* axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(const std::string& name);
std::vector<AxiomId> all_axiom_ids();

struct AxiomMatch {
  AxiomId id{};
  std::map<std::string, Formula> formulas;
  std::map<std::string, Rat> bounds;
  std::map<std::string, std::string> agents;
  std::optional<std::uint32_t> m;  // ACE only
};

// Every returned id's schema, re-instantiated with the bindings, is
// structurally equal to `core`.  At most one entry per id.
std::vector<AxiomMatch> match_axiom(const Formula& core, const AgentSignature& sig);

struct TautologyTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truth-table decision over the propositional abstraction of a core
// formula.  Throws TautologyTooLarge past 20 distinct abstraction
// variables (2^20 rows).
bool is_tautology(const Formula& core);

// Bindings used to produce a schema instance in surface syntax.
struct AxiomInstanceSpec {
  Formula a, b, g;
  Rat r, t;
  std::string agent;
  std::uint32_t m = 1;
  bool primed = false;  // primed spelling for AGP1..AGP3 / AP1..AP3
};

// Builds the surface instance; throws std::invalid_argument when a side
// condition (t > r, r + t <= 1, thresholds in [0,1]) is violated.
Formula build_axiom_instance(AxiomId id, const AxiomInstanceSpec& spec);

}  // namespace ptel
