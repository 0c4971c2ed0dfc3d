#include "ptel/axioms.hpp"

#include <algorithm>
#include <unordered_map>

namespace ptel {

namespace {

const char* kNames[kAxiomCount] = {
    "Prop", "AXNot", "AXImp", "AUX",  "AUF",  "AZNot", "AZImp", "AZAnd",
    "AXZ",  "AXZC1", "AXZC2", "ASZ",  "AOZ",  "AKImp", "AKR",   "AKA",
    "AKDE", "AKS",   "AKT",   "ACE",  "AGP1", "AGP2",  "AGP3",  "AGP4",
    "AGP5", "AGPZ",  "AP1",   "AP2",  "AP3",  "AP4",   "AP5"};

}  // namespace

const char* axiom_name(AxiomId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<AxiomId> axiom_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kAxiomCount; ++i)
    if (name == kNames[i]) return static_cast<AxiomId>(i);
  return std::nullopt;
}

std::vector<AxiomId> all_axiom_ids() {
  std::vector<AxiomId> out;
  for (std::size_t i = 0; i < kAxiomCount; ++i) out.push_back(static_cast<AxiomId>(i));
  return out;
}

bool is_tautology(const Formula& f) {
  // Compile the boolean skeleton: negative indexes are ~ and & gates,
  // non-negative ones propositional variables of the abstraction.
  struct Gate {
    Op op;
    int a = -1, b = -1;
  };
  std::vector<Gate> gates;
  std::vector<Formula> vars;
  std::unordered_map<Formula, int, FormulaHash> var_index;
  std::function<int(const Formula&)> compile = [&](const Formula& g) -> int {
    if (g.op() == Op::Not) {
      int a = compile(g.child());
      gates.push_back({Op::Not, a, -1});
      return -static_cast<int>(gates.size());
    }
    if (g.op() == Op::And) {
      int a = compile(g.child(0));
      int b = compile(g.child(1));
      gates.push_back({Op::And, a, b});
      return -static_cast<int>(gates.size());
    }
    auto it = var_index.find(g);
    if (it != var_index.end()) return it->second;
    int idx = static_cast<int>(vars.size());
    vars.push_back(g);
    var_index.emplace(g, idx);
    return idx;
  };
  int root = compile(f);
  if (vars.size() > 20)
    throw TautologyTooLarge("propositional abstraction has " + std::to_string(vars.size()) +
                            " variables (limit 20)");
  std::vector<char> value(gates.size());
  const std::uint32_t rows = 1u << vars.size();
  for (std::uint32_t asg = 0; asg < rows; ++asg) {
    auto read = [&](int ref) {
      return ref >= 0 ? static_cast<bool>((asg >> ref) & 1u)
                      : static_cast<bool>(value[-ref - 1]);
    };
    for (std::size_t i = 0; i < gates.size(); ++i)
      value[i] = gates[i].op == Op::Not ? !read(gates[i].a)
                                        : (read(gates[i].a) && read(gates[i].b));
    if (!(root >= 0 ? ((asg >> root) & 1u) : value[-root - 1])) return false;
  }
  return true;
}

namespace {

struct Pair {
  Formula l, r;
};

// f == ~(x & ~y), the expansion of x -> y.
std::optional<Pair> as_implies(const Formula& f) {
  if (f.op() != Op::Not || f.child().op() != Op::And) return std::nullopt;
  const Formula& body = f.child();
  if (body.child(1).op() != Op::Not) return std::nullopt;
  return Pair{body.child(0), body.child(1).child()};
}

// f == ~(~x & ~y), the expansion of x | y.
std::optional<Pair> as_or(const Formula& f) {
  if (f.op() != Op::Not || f.child().op() != Op::And) return std::nullopt;
  const Formula& body = f.child();
  if (body.child(0).op() != Op::Not || body.child(1).op() != Op::Not) return std::nullopt;
  return Pair{body.child(0).child(), body.child(1).child()};
}

// f == (x -> y) & (y -> x), both implications expanded.
std::optional<Pair> as_iff(const Formula& f) {
  if (f.op() != Op::And) return std::nullopt;
  auto fwd = as_implies(f.child(0));
  auto bwd = as_implies(f.child(1));
  if (!fwd || !bwd) return std::nullopt;
  if (fwd->l != bwd->r || fwd->r != bwd->l) return std::nullopt;
  return fwd;
}

// f == ~(a & ~a): the expansion of a -> a.
std::optional<Formula> as_self_implication(const Formula& f) {
  auto p = as_implies(f);
  if (p && p->l == p->r) return p->l;
  return std::nullopt;
}

// f == a & ~a.
std::optional<Formula> as_contradiction(const Formula& f) {
  if (f.op() == Op::And && f.child(1).op() == Op::Not && f.child(0) == f.child(1).child())
    return f.child(0);
  return std::nullopt;
}

// f == (a -> a) U a: the expansion of F a.
std::optional<Formula> as_sometime(const Formula& f) {
  if (f.op() != Op::Until) return std::nullopt;
  auto a = as_self_implication(f.child(0));
  if (a && *a == f.child(1)) return f.child(1);
  return std::nullopt;
}

// f == (a -> a) S a: the expansion of O a.
std::optional<Formula> as_once(const Formula& f) {
  if (f.op() != Op::Since) return std::nullopt;
  auto a = as_self_implication(f.child(0));
  if (a && *a == f.child(1)) return f.child(1);
  return std::nullopt;
}

// Atom active(agent) for an agent of the signature.
std::optional<std::string> as_activity(const Formula& f, const AgentSignature& sig) {
  if (f.op() != Op::Atom) return std::nullopt;
  auto ag = activity_agent(f.name());
  if (ag && sig.contains(*ag)) return ag;
  return std::nullopt;
}

bool prob_ge(const Formula& f, const Rat& bound) {
  return f.op() == Op::Prob && f.cmp() == Cmp::Ge && f.bound() == bound;
}

bool proba_ge(const Formula& f, const std::string& agent, const Rat& bound) {
  return f.op() == Op::ProbA && f.cmp() == Cmp::Ge && f.agent() == agent && f.bound() == bound;
}

AxiomMatch mk(AxiomId id) { return AxiomMatch{id, {}, {}, {}, {}}; }

using MatchFn = std::function<std::optional<AxiomMatch>(const Formula&, const AgentSignature&)>;

std::optional<AxiomMatch> match_axnot(const Formula& f, const AgentSignature&) {
  auto p = as_iff(f);
  if (!p || p->l.op() != Op::Not || p->l.child().op() != Op::Next) return std::nullopt;
  Formula a = p->l.child().child();
  if (p->r != Formula::next(Formula::nnot(a))) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AXNot);
  m.formulas["a"] = a;
  return m;
}

std::optional<AxiomMatch> match_unary_distribution(const Formula& f, Op box, AxiomId id) {
  auto p = as_implies(f);
  if (!p || p->l.op() != box) return std::nullopt;
  auto inner = as_implies(p->l.child());
  if (!inner) return std::nullopt;
  auto outer = as_implies(p->r);
  if (!outer) return std::nullopt;
  auto wrap = [&](const Formula& x) {
    return box == Op::Next ? Formula::next(x) : Formula::wprev(x);
  };
  if (outer->l != wrap(inner->l) || outer->r != wrap(inner->r)) return std::nullopt;
  AxiomMatch m = mk(id);
  m.formulas["a"] = inner->l;
  m.formulas["b"] = inner->r;
  return m;
}

std::optional<AxiomMatch> match_aux(const Formula& f, const AgentSignature&) {
  auto p = as_iff(f);
  if (!p || p->l.op() != Op::Until) return std::nullopt;
  Formula a = p->l.child(0), b = p->l.child(1);
  auto rhs = as_or(p->r);
  if (!rhs || rhs->l != b) return std::nullopt;
  if (rhs->r != Formula::aand(a, Formula::next(p->l))) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AUX);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  return m;
}

std::optional<AxiomMatch> match_auf(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Until) return std::nullopt;
  auto fin = as_sometime(p->r);
  if (!fin || *fin != p->l.child(1)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AUF);
  m.formulas["a"] = p->l.child(0);
  m.formulas["b"] = p->l.child(1);
  return m;
}

std::optional<AxiomMatch> match_aznot(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  if (p->l.op() != Op::Not || p->l.child().op() != Op::WeakPrev ||
      p->l.child().child().op() != Op::Not)
    return std::nullopt;
  Formula a = p->l.child().child().child();
  if (p->r != Formula::wprev(a)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AZNot);
  m.formulas["a"] = a;
  return m;
}

std::optional<AxiomMatch> match_azand(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::And) return std::nullopt;
  const Formula& x = p->l.child(0);
  const Formula& y = p->l.child(1);
  if (x.op() != Op::WeakPrev || y.op() != Op::WeakPrev) return std::nullopt;
  if (p->r != Formula::wprev(Formula::aand(x.child(), y.child()))) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AZAnd);
  m.formulas["a"] = x.child();
  m.formulas["b"] = y.child();
  return m;
}

std::optional<AxiomMatch> match_axz(const Formula& f, const AgentSignature&) {
  auto p = as_iff(f);
  if (!p || p->l.op() != Op::Next || p->l.child().op() != Op::WeakPrev) return std::nullopt;
  if (p->l.child().child() != p->r) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AXZ);
  m.formulas["a"] = p->r;
  return m;
}

bool commute_pair(const Formula& l, const Formula& r, Formula& a_out) {
  // l == X Z a, r == Z X a
  if (l.op() != Op::Next || l.child().op() != Op::WeakPrev) return false;
  Formula a = l.child().child();
  if (r != Formula::wprev(Formula::next(a))) return false;
  a_out = a;
  return true;
}

std::optional<AxiomMatch> match_axzc1(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  Formula a;
  if (!commute_pair(p->l, p->r, a)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AXZC1);
  m.formulas["a"] = a;
  return m;
}

std::optional<AxiomMatch> match_axzc2(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  if (p->l.op() != Op::Not || p->l.child().op() != Op::WeakPrev) return std::nullopt;
  auto g = as_contradiction(p->l.child().child());
  if (!g) return std::nullopt;
  auto eq = as_iff(p->r);
  if (!eq) return std::nullopt;
  Formula a;
  if (!commute_pair(eq->l, eq->r, a)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AXZC2);
  m.formulas["a"] = a;
  m.formulas["g"] = *g;
  return m;
}

std::optional<AxiomMatch> match_asz(const Formula& f, const AgentSignature&) {
  auto p = as_iff(f);
  if (!p || p->l.op() != Op::Since) return std::nullopt;
  Formula a = p->l.child(0), b = p->l.child(1);
  auto rhs = as_or(p->r);
  if (!rhs || rhs->l != b) return std::nullopt;
  Formula not_beginning =
      Formula::nnot(Formula::wprev(Formula::aand(a, Formula::nnot(a))));
  if (rhs->r != Formula::aand(not_beginning, Formula::aand(a, Formula::wprev(p->l))))
    return std::nullopt;
  AxiomMatch m = mk(AxiomId::ASZ);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  return m;
}

std::optional<AxiomMatch> match_aoz(const Formula& f, const AgentSignature&) {
  auto body = as_once(f);
  if (!body || body->op() != Op::WeakPrev) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AOZ);
  m.formulas["b"] = body->child();
  return m;
}

std::optional<AxiomMatch> match_akimp(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Know) return std::nullopt;
  const std::string& ag = p->l.agent();
  auto inner = as_implies(p->l.child());
  if (!inner) return std::nullopt;
  auto outer = as_implies(p->r);
  if (!outer) return std::nullopt;
  if (outer->l != Formula::know(ag, inner->l) || outer->r != Formula::know(ag, inner->r))
    return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKImp);
  m.formulas["a"] = inner->l;
  m.formulas["b"] = inner->r;
  m.agents["a"] = ag;
  return m;
}

std::optional<AxiomMatch> match_akr(const Formula& f, const AgentSignature& sig) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  auto ag = as_activity(p->l, sig);
  if (!ag) return std::nullopt;
  auto inner = as_implies(p->r);
  if (!inner || inner->l != Formula::know(*ag, inner->r)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKR);
  m.formulas["a"] = inner->r;
  m.agents["a"] = *ag;
  return m;
}

std::optional<AxiomMatch> match_aka(const Formula& f, const AgentSignature& sig) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  auto ag = as_activity(p->l, sig);
  if (!ag) return std::nullopt;
  if (p->r != Formula::know(*ag, Formula::active(*ag))) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKA);
  m.agents["a"] = *ag;
  return m;
}

std::optional<AxiomMatch> match_akde(const Formula& f, const AgentSignature& sig) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Not) return std::nullopt;
  auto ag = as_activity(p->l.child(), sig);
  if (!ag) return std::nullopt;
  if (p->r.op() != Op::Know || p->r.agent() != *ag) return std::nullopt;
  auto contra = as_contradiction(p->r.child());
  if (!contra) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKDE);
  m.formulas["a"] = *contra;
  m.agents["a"] = *ag;
  return m;
}

std::optional<AxiomMatch> match_aks(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Know) return std::nullopt;
  const std::string& ag = p->l.agent();
  if (p->l.child().op() != Op::Not) return std::nullopt;
  Formula a = p->l.child().child();
  if (p->r != Formula::know(ag, Formula::nnot(Formula::know(ag, a)))) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKS);
  m.formulas["a"] = a;
  m.agents["a"] = ag;
  return m;
}

std::optional<AxiomMatch> match_akt(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Know) return std::nullopt;
  const std::string& ag = p->l.agent();
  Formula a = p->l.child();
  if (p->r != Formula::know(ag, p->l)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AKT);
  m.formulas["a"] = a;
  m.agents["a"] = ag;
  return m;
}

// One expanded E layer: K[a1]x & (K[a2]x & ... K[am]x), right-nested in
// signature order.  Yields x.
std::optional<Formula> peel_everyone(const Formula& f, const AgentSignature& sig) {
  const auto& agents = sig.agents();
  Formula cur = f;
  Formula body;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    Formula layer = cur;
    if (i + 1 < agents.size()) {
      if (cur.op() != Op::And) return std::nullopt;
      layer = cur.child(0);
      cur = cur.child(1);
    }
    if (layer.op() != Op::Know || layer.agent() != agents[i]) return std::nullopt;
    if (i == 0)
      body = layer.child();
    else if (layer.child() != body)
      return std::nullopt;
  }
  return body;
}

std::optional<AxiomMatch> match_ace(const Formula& f, const AgentSignature& sig) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::Common) return std::nullopt;
  Formula a = p->l.child();
  Formula cur = p->r;
  std::uint32_t m = 0;
  while (cur != a) {
    auto peeled = peel_everyone(cur, sig);
    if (!peeled) return std::nullopt;
    cur = *peeled;
    ++m;
  }
  AxiomMatch out = mk(AxiomId::ACE);
  out.formulas["a"] = a;
  out.m = m;
  return out;
}

std::optional<AxiomMatch> match_agp1(const Formula& f, const AgentSignature&) {
  if (f.op() != Op::Prob || f.cmp() != Cmp::Ge || f.bound() != Rat(0)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AGP1);
  m.formulas["a"] = f.child();
  return m;
}

std::optional<AxiomMatch> match_agp2(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  // Pr>=1-r ~a -> ~Pr>=t a   (Pr<=r a -> Pr<t a), side t > r
  if (p->l.op() == Op::Prob && p->l.cmp() == Cmp::Ge && p->l.child().op() == Op::Not &&
      p->r.op() == Op::Not && p->r.child().op() == Op::Prob &&
      p->r.child().cmp() == Cmp::Ge) {
    Formula a = p->l.child().child();
    if (p->r.child().child() == a) {
      Rat r = Rat(1) - p->l.bound(), t = p->r.child().bound();
      if (t > r) {
        AxiomMatch m = mk(AxiomId::AGP2);
        m.formulas["a"] = a;
        m.bounds["r"] = r;
        m.bounds["t"] = t;
        return m;
      }
    }
  }
  // Pr>=t a -> ~Pr>=1-r ~a   (primed: Pr>=t a -> Pr>r a), side t > r
  if (p->l.op() == Op::Prob && p->l.cmp() == Cmp::Ge && p->r.op() == Op::Not &&
      p->r.child().op() == Op::Prob && p->r.child().cmp() == Cmp::Ge &&
      p->r.child().child().op() == Op::Not) {
    Formula a = p->l.child();
    if (p->r.child().child().child() == a) {
      Rat t = p->l.bound(), r = Rat(1) - p->r.child().bound();
      if (t > r) {
        AxiomMatch m = mk(AxiomId::AGP2);
        m.formulas["a"] = a;
        m.bounds["r"] = r;
        m.bounds["t"] = t;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_agp3(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  // ~Pr>=t a -> Pr>=1-t ~a   (Pr<t a -> Pr<=t a)
  if (p->l.op() == Op::Not && p->l.child().op() == Op::Prob && p->l.child().cmp() == Cmp::Ge &&
      p->r.op() == Op::Prob && p->r.cmp() == Cmp::Ge && p->r.child().op() == Op::Not) {
    Formula a = p->l.child().child();
    if (p->r.child().child() == a && p->r.bound() == Rat(1) - p->l.child().bound()) {
      AxiomMatch m = mk(AxiomId::AGP3);
      m.formulas["a"] = a;
      m.bounds["t"] = p->l.child().bound();
      return m;
    }
  }
  // ~Pr>=1-t ~a -> Pr>=t a   (primed: Pr>t a -> Pr>=t a)
  if (p->l.op() == Op::Not && p->l.child().op() == Op::Prob && p->l.child().cmp() == Cmp::Ge &&
      p->l.child().child().op() == Op::Not && p->r.op() == Op::Prob && p->r.cmp() == Cmp::Ge) {
    Formula a = p->r.child();
    if (p->l.child().child().child() == a && p->l.child().bound() == Rat(1) - p->r.bound()) {
      AxiomMatch m = mk(AxiomId::AGP3);
      m.formulas["a"] = a;
      m.bounds["t"] = p->r.bound();
      return m;
    }
  }
  return std::nullopt;
}

Formula expanded_or(const Formula& a, const Formula& b) {
  return Formula::nnot(Formula::aand(Formula::nnot(a), Formula::nnot(b)));
}

std::optional<AxiomMatch> match_agp4(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::And || p->l.child(1).op() != Op::And) return std::nullopt;
  const Formula& c1 = p->l.child(0);
  const Formula& c2 = p->l.child(1).child(0);
  const Formula& c3 = p->l.child(1).child(1);
  if (c1.op() != Op::Prob || c1.cmp() != Cmp::Ge) return std::nullopt;
  if (c2.op() != Op::Prob || c2.cmp() != Cmp::Ge) return std::nullopt;
  Formula a = c1.child(), b = c2.child();
  if (!prob_ge(c3, Rat(1)) || c3.child() != Formula::nnot(Formula::aand(a, b)))
    return std::nullopt;
  Rat q = std::min(Rat(1), c1.bound() + c2.bound());
  if (p->r.op() != Op::Prob || p->r.cmp() != Cmp::Ge || p->r.bound() != q) return std::nullopt;
  if (p->r.child() != expanded_or(a, b)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AGP4);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  m.bounds["r"] = c1.bound();
  m.bounds["t"] = c2.bound();
  return m;
}

std::optional<AxiomMatch> match_agp5(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::And) return std::nullopt;
  const Formula& c1 = p->l.child(0);  // Pr>=1-r ~a
  const Formula& c2 = p->l.child(1);  // ~Pr>=t b
  if (c1.op() != Op::Prob || c1.cmp() != Cmp::Ge || c1.child().op() != Op::Not)
    return std::nullopt;
  if (c2.op() != Op::Not || c2.child().op() != Op::Prob || c2.child().cmp() != Cmp::Ge)
    return std::nullopt;
  Formula a = c1.child().child(), b = c2.child().child();
  Rat r = Rat(1) - c1.bound(), t = c2.child().bound();
  if (r + t > Rat(1)) return std::nullopt;
  if (p->r.op() != Op::Not || p->r.child().op() != Op::Prob ||
      p->r.child().cmp() != Cmp::Ge || p->r.child().bound() != r + t)
    return std::nullopt;
  if (p->r.child().child() != expanded_or(a, b)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AGP5);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  m.bounds["r"] = r;
  m.bounds["t"] = t;
  return m;
}

std::optional<AxiomMatch> match_agpz(const Formula& f, const AgentSignature&) {
  if (!prob_ge(f, Rat(1)) || f.child().op() != Op::WeakPrev) return std::nullopt;
  auto contra = as_contradiction(f.child().child());
  if (!contra) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AGPZ);
  m.formulas["a"] = *contra;
  return m;
}

// The agent-indexed analogues of AGP1..AGP5 over Pr[a].
std::optional<AxiomMatch> match_ap1(const Formula& f, const AgentSignature&) {
  if (f.op() != Op::ProbA || f.cmp() != Cmp::Ge || f.bound() != Rat(0)) return std::nullopt;
  AxiomMatch m = mk(AxiomId::AP1);
  m.formulas["a"] = f.child();
  m.agents["a"] = f.agent();
  return m;
}

std::optional<AxiomMatch> match_ap2(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  if (p->l.op() == Op::ProbA && p->l.cmp() == Cmp::Ge && p->l.child().op() == Op::Not &&
      p->r.op() == Op::Not && p->r.child().op() == Op::ProbA &&
      p->r.child().cmp() == Cmp::Ge && p->r.child().agent() == p->l.agent()) {
    Formula a = p->l.child().child();
    if (p->r.child().child() == a) {
      Rat r = Rat(1) - p->l.bound(), t = p->r.child().bound();
      if (t > r) {
        AxiomMatch m = mk(AxiomId::AP2);
        m.formulas["a"] = a;
        m.bounds["r"] = r;
        m.bounds["t"] = t;
        m.agents["a"] = p->l.agent();
        return m;
      }
    }
  }
  if (p->l.op() == Op::ProbA && p->l.cmp() == Cmp::Ge && p->r.op() == Op::Not &&
      p->r.child().op() == Op::ProbA && p->r.child().cmp() == Cmp::Ge &&
      p->r.child().agent() == p->l.agent() && p->r.child().child().op() == Op::Not) {
    Formula a = p->l.child();
    if (p->r.child().child().child() == a) {
      Rat t = p->l.bound(), r = Rat(1) - p->r.child().bound();
      if (t > r) {
        AxiomMatch m = mk(AxiomId::AP2);
        m.formulas["a"] = a;
        m.bounds["r"] = r;
        m.bounds["t"] = t;
        m.agents["a"] = p->l.agent();
        return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_ap3(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p) return std::nullopt;
  if (p->l.op() == Op::Not && p->l.child().op() == Op::ProbA && p->l.child().cmp() == Cmp::Ge &&
      p->r.op() == Op::ProbA && p->r.cmp() == Cmp::Ge && p->r.child().op() == Op::Not &&
      p->r.agent() == p->l.child().agent()) {
    Formula a = p->l.child().child();
    if (p->r.child().child() == a && p->r.bound() == Rat(1) - p->l.child().bound()) {
      AxiomMatch m = mk(AxiomId::AP3);
      m.formulas["a"] = a;
      m.bounds["t"] = p->l.child().bound();
      m.agents["a"] = p->r.agent();
      return m;
    }
  }
  if (p->l.op() == Op::Not && p->l.child().op() == Op::ProbA && p->l.child().cmp() == Cmp::Ge &&
      p->l.child().child().op() == Op::Not && p->r.op() == Op::ProbA && p->r.cmp() == Cmp::Ge &&
      p->r.agent() == p->l.child().agent()) {
    Formula a = p->r.child();
    if (p->l.child().child().child() == a && p->l.child().bound() == Rat(1) - p->r.bound()) {
      AxiomMatch m = mk(AxiomId::AP3);
      m.formulas["a"] = a;
      m.bounds["t"] = p->r.bound();
      m.agents["a"] = p->r.agent();
      return m;
    }
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_ap4(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::And || p->l.child(1).op() != Op::And) return std::nullopt;
  const Formula& c1 = p->l.child(0);
  const Formula& c2 = p->l.child(1).child(0);
  const Formula& c3 = p->l.child(1).child(1);
  if (c1.op() != Op::ProbA || c1.cmp() != Cmp::Ge) return std::nullopt;
  const std::string& ag = c1.agent();
  if (c2.op() != Op::ProbA || c2.cmp() != Cmp::Ge || c2.agent() != ag) return std::nullopt;
  Formula a = c1.child(), b = c2.child();
  if (!proba_ge(c3, ag, Rat(1)) || c3.child() != Formula::nnot(Formula::aand(a, b)))
    return std::nullopt;
  Rat q = std::min(Rat(1), c1.bound() + c2.bound());
  if (p->r.op() != Op::ProbA || p->r.cmp() != Cmp::Ge || p->r.agent() != ag ||
      p->r.bound() != q || p->r.child() != expanded_or(a, b))
    return std::nullopt;
  AxiomMatch m = mk(AxiomId::AP4);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  m.bounds["r"] = c1.bound();
  m.bounds["t"] = c2.bound();
  m.agents["a"] = ag;
  return m;
}

std::optional<AxiomMatch> match_ap5(const Formula& f, const AgentSignature&) {
  auto p = as_implies(f);
  if (!p || p->l.op() != Op::And) return std::nullopt;
  const Formula& c1 = p->l.child(0);
  const Formula& c2 = p->l.child(1);
  if (c1.op() != Op::ProbA || c1.cmp() != Cmp::Ge || c1.child().op() != Op::Not)
    return std::nullopt;
  const std::string& ag = c1.agent();
  if (c2.op() != Op::Not || c2.child().op() != Op::ProbA || c2.child().cmp() != Cmp::Ge ||
      c2.child().agent() != ag)
    return std::nullopt;
  Formula a = c1.child().child(), b = c2.child().child();
  Rat r = Rat(1) - c1.bound(), t = c2.child().bound();
  if (r + t > Rat(1)) return std::nullopt;
  if (p->r.op() != Op::Not || p->r.child().op() != Op::ProbA ||
      p->r.child().cmp() != Cmp::Ge || p->r.child().agent() != ag ||
      p->r.child().bound() != r + t || p->r.child().child() != expanded_or(a, b))
    return std::nullopt;
  AxiomMatch m = mk(AxiomId::AP5);
  m.formulas["a"] = a;
  m.formulas["b"] = b;
  m.bounds["r"] = r;
  m.bounds["t"] = t;
  m.agents["a"] = ag;
  return m;
}

}  // namespace

std::vector<AxiomMatch> match_axiom(const Formula& core, const AgentSignature& sig) {
  std::vector<AxiomMatch> out;
  auto try_add = [&](std::optional<AxiomMatch> m) {
    if (m) out.push_back(std::move(*m));
  };
  try {
    if (is_tautology(core)) out.push_back(mk(AxiomId::Prop));
  } catch (const TautologyTooLarge&) {
  }
  try_add(match_axnot(core, sig));
  try_add(match_unary_distribution(core, Op::Next, AxiomId::AXImp));
  try_add(match_aux(core, sig));
  try_add(match_auf(core, sig));
  try_add(match_aznot(core, sig));
  try_add(match_unary_distribution(core, Op::WeakPrev, AxiomId::AZImp));
  try_add(match_azand(core, sig));
  try_add(match_axz(core, sig));
  try_add(match_axzc1(core, sig));
  try_add(match_axzc2(core, sig));
  try_add(match_asz(core, sig));
  try_add(match_aoz(core, sig));
  try_add(match_akimp(core, sig));
  try_add(match_akr(core, sig));
  try_add(match_aka(core, sig));
  try_add(match_akde(core, sig));
  try_add(match_aks(core, sig));
  try_add(match_akt(core, sig));
  try_add(match_ace(core, sig));
  try_add(match_agp1(core, sig));
  try_add(match_agp2(core, sig));
  try_add(match_agp3(core, sig));
  try_add(match_agp4(core, sig));
  try_add(match_agp5(core, sig));
  try_add(match_agpz(core, sig));
  try_add(match_ap1(core, sig));
  try_add(match_ap2(core, sig));
  try_add(match_ap3(core, sig));
  try_add(match_ap4(core, sig));
  try_add(match_ap5(core, sig));
  return out;
}

Formula build_axiom_instance(AxiomId id, const AxiomInstanceSpec& s) {
  using F = Formula;
  const Formula& a = s.a;
  const Formula& b = s.b;
  switch (id) {
    case AxiomId::Prop:
      // a -> (b -> a), one familiar representative
      return F::implies(a, F::implies(b, a));
    case AxiomId::AXNot:
      return F::iff(F::nnot(F::next(a)), F::next(F::nnot(a)));
    case AxiomId::AXImp:
      return F::implies(F::next(F::implies(a, b)),
                        F::implies(F::next(a), F::next(b)));
    case AxiomId::AUX: {
      F u = F::until(a, b);
      return F::iff(u, F::oor(b, F::aand(a, F::next(u))));
    }
    case AxiomId::AUF:
      return F::implies(F::until(a, b), F::sometime(b));
    case AxiomId::AZNot:
      return F::implies(F::nnot(F::wprev(F::nnot(a))), F::wprev(a));
    case AxiomId::AZImp:
      return F::implies(F::wprev(F::implies(a, b)),
                        F::implies(F::wprev(a), F::wprev(b)));
    case AxiomId::AZAnd:
      return F::implies(F::aand(F::wprev(a), F::wprev(b)), F::wprev(F::aand(a, b)));
    case AxiomId::AXZ:
      return F::iff(F::next(F::wprev(a)), a);
    case AxiomId::AXZC1:
      return F::implies(F::next(F::wprev(a)), F::wprev(F::next(a)));
    case AxiomId::AXZC2:
      return F::implies(F::nnot(F::wprev(F::aand(s.g, F::nnot(s.g)))),
                        F::iff(F::next(F::wprev(a)), F::wprev(F::next(a))));
    case AxiomId::ASZ: {
      F since = F::since(a, b);
      F fresh = F::nnot(F::wprev(F::aand(a, F::nnot(a))));
      return F::iff(since, F::oor(b, F::aand(fresh, F::aand(a, F::wprev(since)))));
    }
    case AxiomId::AOZ:
      return F::once(F::wprev(b));
    case AxiomId::AKImp:
      return F::implies(F::know(s.agent, F::implies(a, b)),
                        F::implies(F::know(s.agent, a), F::know(s.agent, b)));
    case AxiomId::AKR:
      return F::implies(F::active(s.agent), F::implies(F::know(s.agent, a), a));
    case AxiomId::AKA:
      return F::implies(F::active(s.agent), F::know(s.agent, F::active(s.agent)));
    case AxiomId::AKDE:
      return F::implies(F::nnot(F::active(s.agent)),
                        F::know(s.agent, F::aand(a, F::nnot(a))));
    case AxiomId::AKS:
      return F::implies(F::know(s.agent, F::nnot(a)),
                        F::know(s.agent, F::nnot(F::know(s.agent, a))));
    case AxiomId::AKT:
      return F::implies(F::know(s.agent, a), F::know(s.agent, F::know(s.agent, a)));
    case AxiomId::ACE:
      return F::implies(F::common(a), F::everyone_n(a, s.m));
    case AxiomId::AGP1:
      return s.primed ? F::prob(Cmp::Le, Rat(1), a) : F::prob(Cmp::Ge, Rat(0), a);
    case AxiomId::AGP2:
      if (!(s.t > s.r)) throw std::invalid_argument("AGP2 requires t > r");
      return s.primed ? F::implies(F::prob(Cmp::Ge, s.t, a), F::prob(Cmp::Gt, s.r, a))
                      : F::implies(F::prob(Cmp::Le, s.r, a), F::prob(Cmp::Lt, s.t, a));
    case AxiomId::AGP3:
      return s.primed ? F::implies(F::prob(Cmp::Gt, s.t, a), F::prob(Cmp::Ge, s.t, a))
                      : F::implies(F::prob(Cmp::Lt, s.t, a), F::prob(Cmp::Le, s.t, a));
    case AxiomId::AGP4: {
      Rat q = std::min(Rat(1), s.r + s.t);
      return F::implies(
          F::aand(F::prob(Cmp::Ge, s.r, a),
                  F::aand(F::prob(Cmp::Ge, s.t, b),
                          F::prob(Cmp::Ge, Rat(1), F::nnot(F::aand(a, b))))),
          F::prob(Cmp::Ge, q, F::oor(a, b)));
    }
    case AxiomId::AGP5:
      if (s.r + s.t > Rat(1)) throw std::invalid_argument("AGP5 requires r + t <= 1");
      return F::implies(F::aand(F::prob(Cmp::Le, s.r, a), F::prob(Cmp::Lt, s.t, b)),
                        F::prob(Cmp::Lt, s.r + s.t, F::oor(a, b)));
    case AxiomId::AGPZ:
      return F::prob(Cmp::Ge, Rat(1), F::wprev(F::aand(a, F::nnot(a))));
    case AxiomId::AP1:
      return s.primed ? F::proba(s.agent, Cmp::Le, Rat(1), a)
                      : F::proba(s.agent, Cmp::Ge, Rat(0), a);
    case AxiomId::AP2:
      if (!(s.t > s.r)) throw std::invalid_argument("AP2 requires t > r");
      return s.primed
                 ? F::implies(F::proba(s.agent, Cmp::Ge, s.t, a),
                              F::proba(s.agent, Cmp::Gt, s.r, a))
                 : F::implies(F::proba(s.agent, Cmp::Le, s.r, a),
                              F::proba(s.agent, Cmp::Lt, s.t, a));
    case AxiomId::AP3:
      return s.primed ? F::implies(F::proba(s.agent, Cmp::Gt, s.t, a),
                                   F::proba(s.agent, Cmp::Ge, s.t, a))
                      : F::implies(F::proba(s.agent, Cmp::Lt, s.t, a),
                                   F::proba(s.agent, Cmp::Le, s.t, a));
    case AxiomId::AP4: {
      Rat q = std::min(Rat(1), s.r + s.t);
      return F::implies(
          F::aand(F::proba(s.agent, Cmp::Ge, s.r, a),
                  F::aand(F::proba(s.agent, Cmp::Ge, s.t, b),
                          F::proba(s.agent, Cmp::Ge, Rat(1), F::nnot(F::aand(a, b))))),
          F::proba(s.agent, Cmp::Ge, q, F::oor(a, b)));
    }
    case AxiomId::AP5:
      if (s.r + s.t > Rat(1)) throw std::invalid_argument("AP5 requires r + t <= 1");
      return F::implies(F::aand(F::proba(s.agent, Cmp::Le, s.r, a),
                                F::proba(s.agent, Cmp::Lt, s.t, b)),
                        F::proba(s.agent, Cmp::Lt, s.r + s.t, F::oor(a, b)));
  }
  throw std::logic_error("build_axiom_instance: unhandled id");
}

}  // namespace ptel
