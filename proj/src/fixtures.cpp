#include "ptel/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptel/knested.hpp"

namespace ptel {

namespace {

using F = Formula;

struct Builder {
  Proof p;
  std::size_t counter = 0;

  explicit Builder(std::vector<std::string> agents) { p.sig = AgentSignature(std::move(agents)); }

  std::string fresh() { return "s" + std::to_string(counter++); }

  std::string step(ProofStep s) {
    if (s.id.empty()) s.id = fresh();
    p.steps.push_back(std::move(s));
    return p.steps.back().id;
  }
  std::string axiom(const Formula& f, std::optional<AxiomId> pin = std::nullopt) {
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.axiom = pin;
    s.formula = f;
    return step(std::move(s));
  }
  std::string prop(const Formula& f) { return axiom(f, AxiomId::Prop); }
  std::string hyp(const Formula& f) {
    ProofStep s;
    s.kind = StepKind::Hyp;
    s.formula = f;
    return step(std::move(s));
  }
  std::string mp(const std::string& imp, const std::string& ant, const Formula& concl) {
    ProofStep s;
    s.kind = StepKind::MP;
    s.from = {imp, ant};
    s.formula = concl;
    return step(std::move(s));
  }
  std::string nec(NecRule rule, const std::string& from, const Formula& concl,
                  const std::string& agent = "") {
    ProofStep s;
    s.kind = StepKind::Nec;
    s.nec = rule;
    s.agent = agent;
    s.from = {from};
    s.formula = concl;
    return step(std::move(s));
  }
  // weaken phi (proved by base) to tau -> phi
  std::string under_true(const std::string& base, const Formula& phi) {
    Formula goal = F::implies(F::tt(), phi);
    std::string t = prop(F::implies(phi, goal));
    return mp(t, base, goal);
  }
  // peel the leading true -> off a step's formula
  std::string peel_true(const std::string& wrapped, const Formula& bare) {
    std::string t = prop(F::tt());
    return mp(wrapped, t, bare);
  }
};

NestedContext trivial_ctx() {
  NestedContext ctx;
  ctx.B = {F::tt()};
  return ctx;
}

Proof example1() {
  Builder b({"a1"});
  b.p.default_bound = 100;
  Formula aa = F::atom("aa");
  Formula not_eq0 = F::nnot(F::prob(Cmp::Eq, Rat(0), aa));
  b.p.theory.push_back(not_eq0);

  ProofStep inf;
  inf.kind = StepKind::Inf;
  inf.inf = InfRule::RGA;
  inf.ctx = trivial_ctx();
  inf.alpha = F::nnot(aa);
  inf.r = Rat(1);
  inf.bound = 100;
  for (std::uint64_t k = 1; k <= 100; ++k) {
    Formula le = F::prob(Cmp::Le, Rat(1, BigInt(k)), aa);
    b.p.theory.push_back(le);
    std::string h = b.hyp(le);
    inf.premises[k] = b.under_true(h, le);
  }
  Formula le0 = F::prob(Cmp::Le, Rat(0), aa);
  inf.formula = F::implies(F::tt(), le0);
  std::string inf_id = b.step(std::move(inf));
  std::string le0_id = b.peel_true(inf_id, le0);

  Formula ge0 = F::prob(Cmp::Ge, Rat(0), aa);
  std::string ax = b.axiom(ge0, AxiomId::AGP1);
  Formula eq0 = F::prob(Cmp::Eq, Rat(0), aa);
  std::string conj_t = b.prop(F::implies(ge0, F::implies(le0, eq0)));
  std::string c1 = b.mp(conj_t, ax, F::implies(le0, eq0));
  std::string c2 = b.mp(c1, le0_id, eq0);

  std::string h0 = b.hyp(not_eq0);
  Formula contra = F::aand(eq0, not_eq0);
  std::string t2 = b.prop(F::implies(eq0, F::implies(not_eq0, contra)));
  std::string d1 = b.mp(t2, c2, F::implies(not_eq0, contra));
  b.mp(d1, h0, contra);
  return b.p;
}

Proof agpz_chain() {
  Builder b({"a1"});
  Formula p = F::atom("p");
  Formula body = F::wprev(F::aand(p, F::nnot(p)));
  std::string s1 = b.axiom(F::prob(Cmp::Ge, Rat(1), body), AxiomId::AGPZ);
  Rat half(1, BigInt(2));
  std::string s2 = b.axiom(
      F::implies(F::prob(Cmp::Ge, Rat(1), body), F::prob(Cmp::Gt, half, body)), AxiomId::AGP2);
  std::string s3 = b.mp(s2, s1, F::prob(Cmp::Gt, half, body));
  std::string s4 = b.axiom(
      F::implies(F::prob(Cmp::Gt, half, body), F::prob(Cmp::Ge, half, body)), AxiomId::AGP3);
  b.mp(s4, s3, F::prob(Cmp::Ge, half, body));
  return b.p;
}

Proof nec_chain() {
  Builder b({"a1"});
  Formula p = F::atom("p");
  Formula f0 = F::implies(p, p);
  std::string s = b.prop(f0);
  Formula f1 = F::next(f0);
  s = b.nec(NecRule::RXN, s, f1);
  Formula f2 = F::wprev(f1);
  s = b.nec(NecRule::RZN, s, f2);
  Formula f3 = F::know("a1", f2);
  s = b.nec(NecRule::RKN, s, f3, "a1");
  Formula f4 = F::prob(Cmp::Ge, Rat(1), f3);
  s = b.nec(NecRule::RGPN, s, f4);
  b.nec(NecRule::RPN, s, F::proba("a1", Cmp::Ge, Rat(1), f4), "a1");
  return b.p;
}

// X-lifted negation of a contradiction: derives ~X^i(q & ~q) for every i,
// through the backward direction of AXNot.
struct NextNegChain {
  Builder& b;
  Formula gamma;                      // q & ~q
  std::vector<std::string> neg_ids;   // neg_ids[i] proves ~X^i gamma
  std::vector<Formula> neg_formulas;

  NextNegChain(Builder& bb, Formula g) : b(bb), gamma(std::move(g)) {
    std::string n0 = b.prop(F::nnot(gamma));
    neg_ids.push_back(n0);
    neg_formulas.push_back(F::nnot(gamma));
  }

  void extend_to(std::size_t max_i) {
    while (neg_ids.size() <= max_i) {
      std::size_t j = neg_ids.size();           // deriving ~X^j gamma
      Formula prev = F::next_n(gamma, j - 1);   // X^{j-1} gamma
      std::string lifted = b.nec(NecRule::RXN, neg_ids.back(),
                                 F::next(neg_formulas.back()));  // X ~X^{j-1} g
      Formula axnot = F::iff(F::nnot(F::next(prev)), F::next(F::nnot(prev)));
      std::string ax = b.axiom(axnot, AxiomId::AXNot);
      Formula back = F::implies(F::next(F::nnot(prev)), F::nnot(F::next(prev)));
      std::string ext = b.prop(F::implies(axnot, back));
      std::string back_id = b.mp(ext, ax, back);
      Formula neg = F::nnot(F::next_n(gamma, j));
      std::string id = b.mp(back_id, lifted, neg);
      neg_ids.push_back(id);
      neg_formulas.push_back(neg);
    }
  }
};

Proof ru_theorem(std::uint64_t bound) {
  Builder b({"a1"});
  b.p.default_bound = bound;
  Formula p = F::atom("p");
  Formula q = F::atom("q");
  Formula gamma = F::aand(q, F::nnot(q));

  ProofStep inf;
  inf.kind = StepKind::Inf;
  inf.inf = InfRule::RU;
  inf.ctx = trivial_ctx();
  inf.alpha = p;
  inf.beta = gamma;
  inf.bound = bound;

  NextNegChain chain(b, gamma);
  chain.extend_to(bound);
  for (std::uint64_t i = 0; i <= bound; ++i) {
    Formula tpl = inf_premise_template(InfRule::RU, inf, i);
    std::string tpl_id;
    if (i == 0) {
      tpl_id = chain.neg_ids[0];  // template(0) is ~gamma itself
    } else {
      std::string t = b.prop(F::implies(chain.neg_formulas[i], tpl));
      tpl_id = b.mp(t, chain.neg_ids[i], tpl);
    }
    inf.premises[i] = b.under_true(tpl_id, tpl);
  }
  Formula concl = F::nnot(F::until(p, gamma));
  inf.formula = F::implies(F::tt(), concl);
  std::string inf_id = b.step(std::move(inf));
  b.peel_true(inf_id, concl);
  return b.p;
}

Proof rs_theorem(std::uint64_t bound) {
  Builder b({"a1"});
  b.p.default_bound = bound;
  Formula p = F::atom("p");
  Formula q = F::atom("q");
  Formula gq = F::aand(q, F::nnot(q));
  Formula gp = F::aand(p, F::nnot(p));

  ProofStep inf;
  inf.kind = StepKind::Inf;
  inf.inf = InfRule::RS;
  inf.ctx = trivial_ctx();
  inf.alpha = p;
  inf.beta = gq;
  inf.bound = bound;

  // imp_ids[i] proves Z^i(q & ~q) -> Z^i(p & ~p)
  std::vector<std::string> imp_ids;
  std::vector<Formula> imp_formulas;
  Formula f0 = F::implies(gq, gp);
  imp_ids.push_back(b.prop(f0));
  imp_formulas.push_back(f0);
  for (std::uint64_t j = 1; j <= bound; ++j) {
    std::string lifted = b.nec(NecRule::RZN, imp_ids.back(), F::wprev(imp_formulas.back()));
    Formula a = F::wprev_n(gq, j - 1), c = F::wprev_n(gp, j - 1);
    Formula dist = F::implies(F::wprev(F::implies(a, c)),
                              F::implies(F::wprev(a), F::wprev(c)));
    std::string ax = b.axiom(dist, AxiomId::AZImp);
    Formula goal = F::implies(F::wprev_n(gq, j), F::wprev_n(gp, j));
    std::string m1 = b.mp(ax, lifted, goal);
    imp_ids.push_back(m1);
    imp_formulas.push_back(goal);
  }
  for (std::uint64_t i = 0; i <= bound; ++i) {
    Formula tpl = inf_premise_template(InfRule::RS, inf, i);
    std::string t = b.prop(F::implies(imp_formulas[i], tpl));
    std::string tpl_id = b.mp(t, imp_ids[i], tpl);
    inf.premises[i] = b.under_true(tpl_id, tpl);
  }
  Formula concl = F::nnot(F::since(p, gq));
  inf.formula = F::implies(F::tt(), concl);
  std::string inf_id = b.step(std::move(inf));
  b.peel_true(inf_id, concl);
  return b.p;
}

Proof rc_theorem(std::uint64_t bound) {
  Builder b({"a1", "a2"});
  b.p.default_bound = bound;
  Formula p = F::atom("p");
  Formula tau = F::nnot(F::aand(p, F::nnot(p)));

  NestedContext ctx;
  ctx.B = {F::tt(), F::tt()};
  ctx.X = {NestedOp::know("a1")};

  ProofStep inf;
  inf.kind = StepKind::Inf;
  inf.inf = InfRule::RC;
  inf.ctx = ctx;
  inf.alpha = tau;
  inf.bound = bound;

  // e_ids[i] proves E^i tau
  std::vector<std::string> e_ids;
  std::vector<Formula> e_formulas;
  e_ids.push_back(b.prop(tau));
  e_formulas.push_back(tau);
  for (std::uint64_t j = 1; j <= bound; ++j) {
    const Formula prev = e_formulas.back();
    std::vector<std::string> know_ids;
    std::vector<Formula> know_formulas;
    for (const std::string& ag : b.p.sig.agents()) {
      know_formulas.push_back(F::know(ag, prev));
      know_ids.push_back(b.nec(NecRule::RKN, e_ids.back(), know_formulas.back(), ag));
    }
    // conjoin right to left
    Formula acc_f = know_formulas.back();
    std::string acc_id = know_ids.back();
    for (std::size_t a = know_formulas.size() - 1; a-- > 0;) {
      Formula goal = F::aand(know_formulas[a], acc_f);
      std::string t = b.prop(F::implies(know_formulas[a], F::implies(acc_f, goal)));
      std::string m1 = b.mp(t, know_ids[a], F::implies(acc_f, goal));
      acc_id = b.mp(m1, acc_id, goal);
      acc_f = goal;
    }
    e_ids.push_back(acc_id);
    e_formulas.push_back(F::everyone(prev));
    // the conjunction just built is expand-equal to E(prev); re-declare it
    std::string t = b.prop(F::implies(acc_f, e_formulas.back()));
    e_ids.back() = b.mp(t, acc_id, e_formulas.back());
  }
  for (std::uint64_t i = 0; i <= bound; ++i) {
    Formula tpl = inf_premise_template(InfRule::RC, inf, i);  // E^i tau
    std::string inner = b.under_true(e_ids[i], e_formulas[i]);
    Formula inner_f = F::implies(F::tt(), e_formulas[i]);
    std::string know_id = b.nec(NecRule::RKN, inner, F::know("a1", inner_f), "a1");
    Formula prem = build_k_nested(ctx, tpl);
    std::string t = b.prop(F::implies(F::know("a1", inner_f), prem));
    inf.premises[i] = b.mp(t, know_id, prem);
  }
  inf.formula = build_k_nested(ctx, F::common(tau));
  b.step(std::move(inf));
  return b.p;
}

Proof archimedean_theorem(bool agent_indexed, std::uint64_t bound) {
  Builder b({"a1"});
  b.p.default_bound = bound;
  Formula p = F::atom("p");
  Formula tau = F::nnot(F::aand(p, F::nnot(p)));
  const std::string ag = "a1";

  auto pr = [&](Cmp c, const Rat& s, const Formula& f) {
    return agent_indexed ? F::proba(ag, c, s, f) : F::prob(c, s, f);
  };

  ProofStep inf;
  inf.kind = StepKind::Inf;
  inf.inf = agent_indexed ? InfRule::RA : InfRule::RGA;
  inf.ctx = trivial_ctx();
  inf.alpha = tau;
  inf.r = Rat(1);
  if (agent_indexed) inf.agent = ag;
  inf.bound = bound;

  std::string taut = b.prop(tau);
  Formula full = pr(Cmp::Ge, Rat(1), tau);
  std::string full_id =
      b.nec(agent_indexed ? NecRule::RPN : NecRule::RGPN, taut, full, agent_indexed ? ag : "");

  for (std::uint64_t i = 1; i <= bound; ++i) {
    Rat s = Rat(1) - Rat(1, BigInt(i));
    Formula goal = pr(Cmp::Ge, s, tau);
    std::string goal_id;
    if (s == Rat(0)) {
      goal_id = b.axiom(goal, agent_indexed ? AxiomId::AP1 : AxiomId::AGP1);
    } else {
      Formula step_up = F::implies(full, pr(Cmp::Gt, s, tau));
      std::string a2 = b.axiom(step_up, agent_indexed ? AxiomId::AP2 : AxiomId::AGP2);
      std::string m1 = b.mp(a2, full_id, pr(Cmp::Gt, s, tau));
      Formula step_down = F::implies(pr(Cmp::Gt, s, tau), goal);
      std::string a3 = b.axiom(step_down, agent_indexed ? AxiomId::AP3 : AxiomId::AGP3);
      goal_id = b.mp(a3, m1, goal);
    }
    inf.premises[i] = b.under_true(goal_id, goal);
  }
  inf.formula = F::implies(F::tt(), full);
  std::string inf_id = b.step(std::move(inf));
  b.peel_true(inf_id, full);
  return b.p;
}

}  // namespace

std::map<std::string, Proof> bundled_proofs() {
  std::map<std::string, Proof> out;
  out["example1"] = example1();
  out["agpz-chain"] = agpz_chain();
  out["nec-chain"] = nec_chain();
  out["ru-theorem"] = ru_theorem(15);
  out["rs-theorem"] = rs_theorem(8);
  out["rc-theorem"] = rc_theorem(6);
  out["rga-theorem"] = archimedean_theorem(false, 25);
  out["ra-theorem"] = archimedean_theorem(true, 25);
  return out;
}

namespace {

Model witness_next(int k) {
  Model m;
  m.sig = AgentSignature({"a1"});
  m.atoms = {"p"};
  Run r;
  for (int i = 0; i <= k; ++i) r.stem.push_back({"p"});
  r.loop.push_back({});
  m.runs.push_back(std::move(r));
  m.reindex();
  const std::uint32_t W = static_cast<std::uint32_t>(m.world_count());
  m.access.assign(1, std::vector<std::vector<std::uint32_t>>(W));
  m.run_measure.assign(W, {Rat(1)});
  m.agent_space.assign(W, {{Sample{0, 0, Rat(1)}}});
  return m;
}

Model witness_common(int k) {
  Model m;
  m.sig = AgentSignature({"a1", "a2"});
  m.atoms = {"p", activity_atom("a1"), activity_atom("a2")};
  for (int j = 0; j <= k + 1; ++j) {
    Run r;
    std::set<std::string> val{activity_atom("a1"), activity_atom("a2")};
    if (j <= k) val.insert("p");
    r.loop.push_back(val);
    m.runs.push_back(std::move(r));
  }
  m.reindex();
  const std::uint32_t W = static_cast<std::uint32_t>(m.world_count());
  m.access.assign(2, std::vector<std::vector<std::uint32_t>>(W));
  for (std::uint32_t w = 0; w < W; ++w) {
    m.access[0][w].push_back(w);
    m.access[1][w].push_back(w);
  }
  for (std::uint32_t j = 0; j + 1 < W; ++j) {
    std::size_t agent = j % 2;
    m.access[agent][j].push_back(j + 1);
    m.access[agent][j + 1].push_back(j);
  }
  for (auto& per_agent : m.access)
    for (auto& succ : per_agent) std::sort(succ.begin(), succ.end());
  std::vector<Rat> weights(m.runs.size(), Rat(0));
  weights[0] = Rat(1);
  m.run_measure.assign(W, weights);
  m.agent_space.assign(W, {{Sample{0, 0, Rat(1)}}, {Sample{0, 0, Rat(1)}}});
  return m;
}

Model witness_prob(int k) {
  Model m;
  m.sig = AgentSignature({"a1"});
  m.atoms = {"p"};
  Run r0, r1;
  r0.loop.push_back({"p"});
  r1.loop.push_back({});
  m.runs.push_back(std::move(r0));
  m.runs.push_back(std::move(r1));
  m.reindex();
  const std::uint32_t W = static_cast<std::uint32_t>(m.world_count());
  m.access.assign(1, std::vector<std::vector<std::uint32_t>>(W));
  Rat w0(1, BigInt(k + 1));
  m.run_measure.assign(W, {w0, Rat(1) - w0});
  m.agent_space.assign(W, {{Sample{0, 0, Rat(1)}}});
  return m;
}

}  // namespace

Witness make_witness(const std::string& family, int k) {
  if (k < 0) throw std::invalid_argument("witness index must be non-negative");
  Witness w;
  w.family = family;
  w.k = k;
  Formula p = F::atom("p");
  if (family == "next") {
    w.model = witness_next(k);
    for (int i = 0; i <= k; ++i) w.formulas.push_back(F::next_n(p, i));
    w.formulas.push_back(F::nnot(F::always(p)));
  } else if (family == "common") {
    w.model = witness_common(k);
    for (int i = 0; i <= k; ++i) w.formulas.push_back(F::everyone_n(p, i));
    w.formulas.push_back(F::nnot(F::common(p)));
  } else if (family == "prob") {
    w.model = witness_prob(k);
    for (int j = 1; j <= k; ++j)
      w.formulas.push_back(F::prob(Cmp::Le, Rat(1, BigInt(j)), p));
    w.formulas.push_back(F::nnot(F::prob(Cmp::Eq, Rat(0), p)));
  } else {
    throw std::invalid_argument("unknown witness family: " + family);
  }
  return w;
}

}  // namespace ptel
