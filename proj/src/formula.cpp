#include "ptel/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ptel {

const char* cmp_token(Cmp c) {
  switch (c) {
    case Cmp::Ge: return ">=";
    case Cmp::Gt: return ">";
    case Cmp::Le: return "<=";
    case Cmp::Lt: return "<";
    case Cmp::Eq: return "=";
  }
  return "?";
}

AgentSignature::AgentSignature(std::vector<std::string> agents) : agents_(std::move(agents)) {
  if (agents_.empty()) throw std::invalid_argument("agent signature must be non-empty");
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].empty()) throw std::invalid_argument("empty agent name");
    for (std::size_t j = i + 1; j < agents_.size(); ++j)
      if (agents_[i] == agents_[j])
        throw std::invalid_argument("duplicate agent name: " + agents_[i]);
  }
}

bool AgentSignature::contains(const std::string& name) const {
  return index_of(name).has_value();
}

std::optional<std::size_t> AgentSignature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < agents_.size(); ++i)
    if (agents_[i] == name) return i;
  return std::nullopt;
}

std::string activity_atom(const std::string& agent) { return "active(" + agent + ")"; }

std::optional<std::string> activity_agent(const std::string& atom) {
  if (atom.size() > 8 && atom.compare(0, 7, "active(") == 0 && atom.back() == ')')
    return atom.substr(7, atom.size() - 8);
  return std::nullopt;
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

std::size_t hash_rat(const Rat& r) {
  return mix(std::hash<std::string>{}(r.numerator().str()),
             std::hash<std::string>{}(r.denominator().str()));
}

bool core_op(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Not:
    case Op::And:
    case Op::Next:
    case Op::Until:
    case Op::WeakPrev:
    case Op::Since:
    case Op::Know:
    case Op::Common:
    case Op::Prob:
    case Op::ProbA:
      return true;
    default:
      return false;
  }
}

bool has_bound(Op op) { return op == Op::Prob || op == Op::ProbA; }

}  // namespace

Formula Formula::make(Node n) {
  std::size_t h = mix(0x51ed2701u, static_cast<std::size_t>(n.op));
  h = mix(h, static_cast<std::size_t>(n.cmp));
  if (!n.label.empty()) h = mix(h, hash_string(n.label));
  if (has_bound(n.op)) h = mix(h, hash_rat(n.bound));
  std::size_t d = 0;
  bool core = core_op(n.op) && (!has_bound(n.op) || n.cmp == Cmp::Ge);
  for (const Formula& k : n.kids) {
    h = mix(h, k.hash());
    d = std::max(d, k.depth() + 1);
    core = core && k.is_core();
  }
  n.hash = h;
  n.depth = d;
  n.core = core;
  Formula f;
  f.n_ = std::make_shared<const Node>(std::move(n));
  return f;
}

Formula Formula::atom(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  Node n;
  n.op = Op::Atom;
  n.label = name;
  return make(std::move(n));
}

Formula Formula::active(const std::string& agent) { return atom(activity_atom(agent)); }

Formula Formula::tt() {
  Node n;
  n.op = Op::True;
  return make(std::move(n));
}

Formula Formula::ff() {
  Node n;
  n.op = Op::False;
  return make(std::move(n));
}

#define PTEL_UNARY(fn, theop)                          \
  Formula Formula::fn(Formula f) {                     \
    if (!f.valid()) throw std::invalid_argument("null operand"); \
    Node n;                                            \
    n.op = theop;                                      \
    n.kids = {std::move(f)};                           \
    return make(std::move(n));                         \
  }

#define PTEL_BINARY(fn, theop)                         \
  Formula Formula::fn(Formula l, Formula r) {          \
    if (!l.valid() || !r.valid()) throw std::invalid_argument("null operand"); \
    Node n;                                            \
    n.op = theop;                                      \
    n.kids = {std::move(l), std::move(r)};             \
    return make(std::move(n));                         \
  }

PTEL_UNARY(nnot, Op::Not)
PTEL_UNARY(next, Op::Next)
PTEL_UNARY(wprev, Op::WeakPrev)
PTEL_UNARY(common, Op::Common)
PTEL_UNARY(sometime, Op::Sometime)
PTEL_UNARY(always, Op::Always)
PTEL_UNARY(once, Op::Once)
PTEL_UNARY(sofar, Op::Sofar)
PTEL_UNARY(everyone, Op::Everyone)
PTEL_BINARY(aand, Op::And)
PTEL_BINARY(implies, Op::Implies)
PTEL_BINARY(oor, Op::Or)
PTEL_BINARY(iff, Op::Iff)
PTEL_BINARY(until, Op::Until)
PTEL_BINARY(since, Op::Since)

#undef PTEL_UNARY
#undef PTEL_BINARY

Formula Formula::know(const std::string& agent, Formula f) {
  if (agent.empty()) throw std::invalid_argument("empty agent name");
  if (!f.valid()) throw std::invalid_argument("null operand");
  Node n;
  n.op = Op::Know;
  n.label = agent;
  n.kids = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::prob(Cmp cmp, const Rat& bound, Formula f) {
  if (!in_unit_interval(bound)) throw std::invalid_argument("probability threshold outside [0,1]");
  if (!f.valid()) throw std::invalid_argument("null operand");
  Node n;
  n.op = Op::Prob;
  n.cmp = cmp;
  n.bound = bound;
  n.kids = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::proba(const std::string& agent, Cmp cmp, const Rat& bound, Formula f) {
  if (agent.empty()) throw std::invalid_argument("empty agent name");
  if (!in_unit_interval(bound)) throw std::invalid_argument("probability threshold outside [0,1]");
  if (!f.valid()) throw std::invalid_argument("null operand");
  Node n;
  n.op = Op::ProbA;
  n.cmp = cmp;
  n.label = agent;
  n.bound = bound;
  n.kids = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::next_n(Formula f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = next(f);
  return f;
}

Formula Formula::wprev_n(Formula f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = wprev(f);
  return f;
}

Formula Formula::everyone_n(Formula f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = everyone(f);
  return f;
}

Formula Formula::conj(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("conj of empty list");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = aand(fs[i], acc);
  return acc;
}

bool Formula::operator==(const Formula& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->hash != o.n_->hash) return false;
  return compare(*this, o) == 0;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return 0;
  if (!a.n_) return -1;
  if (!b.n_) return 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.n_->cmp != b.n_->cmp) return a.n_->cmp < b.n_->cmp ? -1 : 1;
  if (int c = a.n_->label.compare(b.n_->label)) return c < 0 ? -1 : 1;
  if (a.n_->bound != b.n_->bound) return a.n_->bound < b.n_->bound ? -1 : 1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (int c = compare(a.child(i), b.child(i))) return c;
  return 0;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

}  // namespace ptel
