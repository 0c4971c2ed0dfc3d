// Proof transformations.
//
// deduction_transform: turns a checking proof of b from T + {a} into a
// checking proof of a -> b from T.  Finitary steps are rewritten with the
// usual propositional moves; an infinitary step with context (B, X) is
// rebuilt with the context (b_0, ..., b_{k-1}, a & b_k) (for k = 0 the
// single entry becomes a & b_0), at the same bound.
//
// strong_necessitation_transform: turns a checking proof of g from T into a
// proof of op g from {op d : d in T} for op one of X, Z, K[a].  Axiom steps
// gain a necessitation; modus ponens routes through the distribution axiom
// of op; an infinitary step is rebuilt with the extended context
// (b_0, ..., b_k, b_k | ~b_k) and (X_1, ..., X_k, op).
#pragma once

#include "ptel/knested.hpp"
#include "ptel/proof.hpp"

namespace ptel {

// Throws std::invalid_argument when the input proof does not check or when
// alpha is not (expand-equal to) one of the theory formulas.
Proof deduction_transform(const Proof& input, const Formula& alpha);

// Throws std::invalid_argument when the input proof does not check.
Proof strong_necessitation_transform(const Proof& input, const NestedOp& op);

}  // namespace ptel
