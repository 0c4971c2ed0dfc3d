// Hilbert-style proof objects and their checker.
//
// A proof is a sequence of steps over an ambient theory: axiom instances,
// hypotheses, modus ponens, the five necessitation rules (whose premise
// must be a theorem, i.e. derived without hypotheses), and applications of
// the five countable-premise rules (RU, RS, RC, RGA, RA) checked up to a
// declared finite bound.  Every rule that carries a k-nested context states
// it explicitly; the checker regenerates the premise template for each
// index and compares modulo abbreviation expansion.
//
// A proof with no infinitary steps checks to Verified; otherwise the result
// is downgraded to VerifiedBounded(N) where N is the smallest bound among
// the infinitary steps.  Rejection reports the first failing step.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "ptel/axioms.hpp"
#include "ptel/formula.hpp"
#include "ptel/knested.hpp"

namespace ptel {

enum class StepKind : std::uint8_t { Axiom, Hyp, MP, Nec, Inf };

enum class NecRule : std::uint8_t { RXN, RZN, RKN, RGPN, RPN };
const char* nec_rule_name(NecRule r);
std::optional<NecRule> nec_rule_from_name(const std::string& s);

enum class InfRule : std::uint8_t { RU, RS, RC, RGA, RA };
const char* inf_rule_name(InfRule r);
std::optional<InfRule> inf_rule_from_name(const std::string& s);

struct ProofStep {
  std::string id;
  StepKind kind = StepKind::Axiom;
  Formula formula;  // the statement of this step (surface form allowed)

  std::optional<AxiomId> axiom;    // Axiom: optional pin to one schema
  std::vector<std::string> from;   // MP: two earlier ids; Nec: one earlier id
  NecRule nec = NecRule::RXN;      // Nec
  std::string agent;               // Nec RKN / RPN and Inf RA
  InfRule inf = InfRule::RU;       // Inf
  NestedContext ctx;               // Inf
  Formula alpha, beta;             // Inf rule parameters (beta for RU/RS)
  Rat r;                           // Inf RGA / RA threshold
  std::optional<std::uint64_t> bound;        // Inf: per-step premise bound
  std::map<std::uint64_t, std::string> premises;  // Inf: index -> step id
};

struct Proof {
  AgentSignature sig;
  std::vector<Formula> theory;
  std::vector<ProofStep> steps;
  std::uint64_t default_bound = 10;
};

struct CheckResult {
  enum class Status { Verified, VerifiedBounded, Rejected } status = Status::Verified;
  std::uint64_t bound = 0;       // VerifiedBounded
  std::string step_id;           // Rejected
  std::string reason;            // Rejected
  bool ok() const { return status != Status::Rejected; }
  std::string str() const;
};

// Premise template of an infinitary rule at index i (surface form; the
// caller wraps it with build_k_nested and expands for comparison).
Formula inf_premise_template(InfRule rule, const ProofStep& step, std::uint64_t i);
// Conclusion payload of an infinitary rule.
Formula inf_conclusion_template(InfRule rule, const ProofStep& step);
// Smallest premise index of the rule (ceil(1/r) for the Archimedean rules,
// 0 otherwise).
std::uint64_t inf_first_index(InfRule rule, const Rat& r);

// extra_theory is merged with proof.theory; bound_override forces the
// premise bound of every infinitary step.
CheckResult check_proof(const Proof& proof,
                        std::span<const Formula> extra_theory = {},
                        std::optional<std::uint64_t> bound_override = std::nullopt);

// theorem flag per step: true iff no Hyp occurs in the step's ancestry.
// Valid only for proofs that check; computed positionally.
std::vector<bool> theorem_flags(const Proof& proof);

}  // namespace ptel
