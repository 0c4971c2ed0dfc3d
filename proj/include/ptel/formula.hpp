// Formula AST for the probabilistic temporal epistemic logic.
//
// A single node kind covers both the core language (negation, conjunction,
// next, until, weak-previous, since, single-agent knowledge, common
// knowledge, and the two >=-threshold probability operators) and the surface
// abbreviations (->, |, <->, F, G, O, H, E, constants, and the remaining
// probability comparisons).  Core formulas are exactly the values for which
// is_core() holds; expand() maps any surface formula onto the core fragment.
//
// Formulas are immutable and structurally shared; equality is structural
// with a cached hash.  All operations here are pure.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptel/rational.hpp"

namespace ptel {

enum class Op : std::uint8_t {
  // core
  Atom,
  Not,
  And,
  Next,
  Until,
  WeakPrev,
  Since,
  Know,
  Common,
  Prob,   // run probability  Pr{cmp}{bound}
  ProbA,  // agent probability Pr[a]{cmp}{bound}
  // surface abbreviations
  True,
  False,
  Implies,
  Or,
  Iff,
  Sometime,  // F
  Always,    // G
  Once,      // O
  Sofar,     // H
  Everyone,  // E
};

enum class Cmp : std::uint8_t { Ge, Gt, Le, Lt, Eq };

const char* cmp_token(Cmp c);

// Ordered list of distinct agent names a1,...,am (m >= 1).  The order is
// load-bearing: E expands as a right-nested conjunction in this order.
class AgentSignature {
 public:
  AgentSignature() = default;
  explicit AgentSignature(std::vector<std::string> agents);

  const std::vector<std::string>& agents() const { return agents_; }
  std::size_t size() const { return agents_.size(); }
  bool contains(const std::string& name) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> agents_;
};

// Surface name of the activity atom of an agent.  Activity atoms are
// ordinary atoms with this reserved spelling.
std::string activity_atom(const std::string& agent);
// If `atom` is an activity atom, yields the agent name.
std::optional<std::string> activity_agent(const std::string& atom);

class Formula {
 public:
  Formula() = default;  // empty handle; only comparison/assignment allowed

  static Formula atom(const std::string& name);
  static Formula active(const std::string& agent);
  static Formula tt();
  static Formula ff();
  static Formula nnot(Formula f);
  static Formula aand(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula oor(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula wprev(Formula f);
  static Formula since(Formula l, Formula r);
  static Formula know(const std::string& agent, Formula f);
  static Formula common(Formula f);
  static Formula sometime(Formula f);
  static Formula always(Formula f);
  static Formula once(Formula f);
  static Formula sofar(Formula f);
  static Formula everyone(Formula f);
  // Throws std::invalid_argument unless bound is in [0,1].
  static Formula prob(Cmp cmp, const Rat& bound, Formula f);
  static Formula proba(const std::string& agent, Cmp cmp, const Rat& bound, Formula f);

  // n-fold application, op^0(f) = f.
  static Formula next_n(Formula f, std::size_t n);
  static Formula wprev_n(Formula f, std::size_t n);
  static Formula everyone_n(Formula f, std::size_t n);
  // Right-nested conjunction of a non-empty list.
  static Formula conj(const std::vector<Formula>& fs);

  bool valid() const { return n_ != nullptr; }
  Op op() const { return n_->op; }
  std::size_t arity() const { return n_->kids.size(); }
  const Formula& child(std::size_t i = 0) const { return n_->kids[i]; }
  const std::string& name() const { return n_->label; }   // Atom
  const std::string& agent() const { return n_->label; }  // Know / ProbA
  Cmp cmp() const { return n_->cmp; }
  const Rat& bound() const { return n_->bound; }
  std::size_t hash() const { return n_->hash; }
  // Maximum operator nesting depth; atoms and constants have depth 0.
  std::size_t depth() const { return n_->depth; }
  // True iff only core operators occur (probability comparisons all Ge).
  bool is_core() const { return n_->core; }

  bool same_node(const Formula& o) const { return n_ == o.n_; }
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
  // Total structural order (used for deterministic listings).
  static int compare(const Formula& a, const Formula& b);
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

 private:
  struct Node {
    Op op;
    Cmp cmp = Cmp::Ge;
    std::string label;
    Rat bound;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    std::size_t depth = 0;
    bool core = false;
  };

  static Formula make(Node n);
  std::shared_ptr<const Node> n_;
};

// All subformulas (including f itself), children before parents, no
// duplicates under structural equality.
std::vector<Formula> subformulas(const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace ptel
