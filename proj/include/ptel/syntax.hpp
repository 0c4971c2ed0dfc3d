// Concrete syntax: parser, printer and abbreviation expansion.
//
// Grammar (whitespace-insensitive, UTF-8):
//   formula := impl
//   impl    := iff ("->" impl)?
//   iff     := or ("<->" or)*          (folded to the right)
//   or      := and ("|" and)*          (folded to the right)
//   and     := temporal ("&" temporal)*  (folded to the right)
//   temporal:= unary (("U"|"S") temporal)?
//   unary   := ("~"|"X"|"Z"|"F"|"G"|"O"|"H"|"C"|"E") unary
//            | "K[" agent "]" unary
//            | "Pr" cmp rational unary
//            | "Pr[" agent "]" cmp rational unary
//            | atom | "true" | "false" | "active(" agent ")" | "(" formula ")"
//   cmp     := ">=" | "<=" | "<" | ">" | "="
//   rational:= nat ("/" nat)?            (value must lie in [0,1])
//
// The single capital letters X Z F G O H C E U S and the words true, false,
// active, K, Pr are reserved; atoms and agents are other identifiers
// ([A-Za-z_][A-Za-z0-9_]*).
#pragma once

#include <stdexcept>
#include <string>

#include "ptel/formula.hpp"

namespace ptel {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// Throws ParseError on malformed input, unknown agents, thresholds outside
// [0,1].  The result round-trips: parse(print(f), sig) == f.
Formula parse(const std::string& text, const AgentSignature& sig);

// Minimal-parentheses rendering under the grammar above.
std::string print(const Formula& f);

// Rewrites every abbreviation into the core fragment:
//   a -> b      ~(a & ~b)
//   a | b       ~(~a & ~b)
//   a <-> b     (a -> b) & (b -> a), both implications expanded
//   F a         (a -> a) U a          G a   ~F~a
//   O a         (a -> a) S a          H a   ~O~a
//   E a         K[a1] a & ... & K[am] a, right-nested in signature order
//   true        ~(active(a1) & ~active(a1))        false   its negation body
//   Pr<s a      ~Pr>=s a               Pr<=s a     Pr>=1-s ~a
//   Pr>s a      ~Pr>=1-s ~a            Pr=s a      Pr>=s a & Pr>=1-s ~a
// and the agent-indexed probability family in the same way.
// Idempotent on core formulas.
Formula expand(const Formula& f, const AgentSignature& sig);

}  // namespace ptel
