// Independent reference evaluation: a literal bounded-quantifier reading of
// the satisfaction clauses, kept free of the truth-set algebra.
//
// Three-valued results: until searches witnesses only up to the given
// horizon and reports unknown when the search is inconclusive; since is
// decided exactly (its quantifier is bounded by the current time).  One
// documented exception keeps the oracle decisive where exhaustion is
// conclusive: when the witness side of an until is an atom or a negated
// atom, its values repeat with the run's loop once past the stem, so a
// fruitless scan of stem plus one full loop decides false.
//
// Knowledge and common knowledge quantify over concrete instances of
// accessible canonical worlds.  Instance checks rely on a structural
// periodicity bound for this model class: along a run with stem p and loop
// l, the truth value of a core formula of depth d at time n depends only on
// n mod l once n >= p + d*l (each weak-previous or since level can defer
// stabilization by at most one lap; every other connective preserves it).
// Common knowledge iterates the everyone-modality k times for every k up to
// the canonical world count, which saturates reachability exactly.
#pragma once

#include <cstdint>

#include "ptel/model.hpp"
#include "ptel/syntax.hpp"

namespace ptel {

enum class TriBool : std::int8_t { False = 0, True = 1, Unknown = 2 };

inline TriBool tri(bool b) { return b ? TriBool::True : TriBool::False; }
TriBool tri_not(TriBool a);
TriBool tri_and(TriBool a, TriBool b);
TriBool tri_or(TriBool a, TriBool b);
const char* tri_str(TriBool a);

// Evaluates the (surface) formula at (run, time); until witnesses are
// searched for j in [time, horizon].
TriBool brute_force_holds(const Model& m, std::uint32_t run, std::uint64_t time,
                          const Formula& f, std::uint64_t horizon);

}  // namespace ptel
