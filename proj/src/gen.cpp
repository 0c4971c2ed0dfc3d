#include "ptel/gen.hpp"

#include <algorithm>
#include <numeric>

#include "ptel/knested.hpp"
#include "ptel/syntax.hpp"

namespace ptel {

AgentSignature gen_signature(const GenParams& p) {
  int m = std::clamp(p.agent_count, 1, 4);
  std::vector<std::string> agents;
  for (int i = 1; i <= m; ++i) agents.push_back("a" + std::to_string(i));
  return AgentSignature(agents);
}

std::vector<std::string> gen_atoms(const GenParams& p) {
  int k = std::clamp(p.atom_count, 1, 6);
  std::vector<std::string> atoms;
  for (int i = 1; i <= k; ++i) atoms.push_back("p" + std::to_string(i));
  return atoms;
}

namespace {

std::vector<Rat> gen_weights(Rng& rng, std::size_t n, int max_den) {
  std::vector<std::uint64_t> raw(n, 0);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    raw[i] = rng.below(static_cast<std::uint64_t>(max_den) + 1);
    sum += raw[i];
  }
  if (sum == 0) {
    raw[rng.below(n)] = 1;
    sum = 1;
  }
  std::vector<Rat> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = Rat(BigInt(raw[i]), BigInt(sum));
  return out;
}

std::vector<Sample> gen_samples(Rng& rng, const Model& m, int max_den) {
  int count = rng.range(1, 3);
  std::vector<Sample> samples(count);
  std::vector<Rat> w = gen_weights(rng, count, max_den);
  for (int i = 0; i < count; ++i) {
    samples[i].run = static_cast<std::uint32_t>(rng.below(m.runs.size()));
    const Run& r = m.runs[samples[i].run];
    samples[i].time = rng.below(r.period_worlds() + 2 * r.loop_len() + 1);
    samples[i].weight = w[i];
  }
  return samples;
}

}  // namespace

Model gen_model(const GenParams& p) {
  Rng rng(p.seed * 0x9e3779b97f4a7c15ULL + 0xc0ffee);
  Model m;
  m.sig = gen_signature(p);
  m.atoms = gen_atoms(p);
  for (const std::string& a : m.sig.agents()) m.atoms.push_back(activity_atom(a));

  int nruns = rng.range(std::max(1, p.min_runs), std::max(1, p.max_runs));
  for (int i = 0; i < nruns; ++i) {
    Run r;
    int stem = rng.range(0, std::max(0, p.max_stem));
    int loop = rng.range(std::max(1, p.min_loop), std::max(1, p.max_loop));
    auto valuation = [&]() {
      std::set<std::string> val;
      for (const std::string& at : gen_atoms(p))
        if (rng.chance(50)) val.insert(at);
      for (const std::string& ag : m.sig.agents())
        if (rng.chance(70)) val.insert(activity_atom(ag));
      return val;
    };
    for (int n = 0; n < stem; ++n) r.stem.push_back(valuation());
    for (int n = 0; n < loop; ++n) r.loop.push_back(valuation());
    m.runs.push_back(std::move(r));
  }
  m.reindex();
  const std::uint32_t W = static_cast<std::uint32_t>(m.world_count());

  // Per agent: equivalence classes over the active worlds (union-find over
  // random pairs), then the complete relation on each class.  Guarantees
  // symmetry, transitivity, active self-loops and target activity.
  m.access.assign(m.sig.size(), std::vector<std::vector<std::uint32_t>>(W));
  for (std::size_t a = 0; a < m.sig.size(); ++a) {
    const std::string& agent = m.sig.agents()[a];
    std::vector<std::uint32_t> active_worlds;
    for (std::uint32_t w = 0; w < W; ++w)
      if (m.active(agent, m.world_at(w))) active_worlds.push_back(w);
    std::vector<std::uint32_t> parent(W);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < active_worlds.size(); ++i)
      for (std::size_t j = i + 1; j < active_worlds.size(); ++j)
        if (rng.chance(p.edge_density_pct / 2))
          parent[find(active_worlds[i])] = find(active_worlds[j]);
    for (std::uint32_t w : active_worlds)
      for (std::uint32_t v : active_worlds)
        if (find(w) == find(v)) m.access[a][w].push_back(v);
  }

  std::vector<Rat> default_measure = gen_weights(rng, m.runs.size(), p.max_denominator);
  m.run_measure.assign(W, default_measure);
  for (std::uint32_t w = 0; w < W; ++w)
    if (rng.chance(30)) m.run_measure[w] = gen_weights(rng, m.runs.size(), p.max_denominator);

  m.agent_space.assign(W, std::vector<std::vector<Sample>>(m.sig.size()));
  std::vector<std::vector<Sample>> default_space(m.sig.size());
  for (std::size_t a = 0; a < m.sig.size(); ++a) default_space[a] = gen_samples(rng, m, p.max_denominator);
  for (std::uint32_t w = 0; w < W; ++w)
    for (std::size_t a = 0; a < m.sig.size(); ++a)
      m.agent_space[w][a] = rng.chance(40) ? gen_samples(rng, m, p.max_denominator)
                                           : default_space[a];
  return m;
}

Rat gen_threshold(Rng& rng, const GenParams& p) {
  int den = rng.range(1, std::max(1, p.max_denominator));
  int num = rng.range(0, den);
  return Rat(BigInt(num), BigInt(den));
}

Formula gen_formula(Rng& rng, const GenParams& p, const AgentSignature& sig,
                    const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0) {
    int pick = rng.range(0, 9);
    if (pick < 6) return Formula::atom(atoms[rng.below(atoms.size())]);
    if (pick < 8) return Formula::active(sig.agents()[rng.below(sig.size())]);
    return pick == 8 ? Formula::tt() : Formula::ff();
  }
  auto sub = [&]() { return gen_formula(rng, p, sig, atoms, depth - 1); };
  const std::string& agent = sig.agents()[rng.below(sig.size())];
  switch (rng.range(0, 17)) {
    case 0: return Formula::nnot(sub());
    case 1: return Formula::aand(sub(), sub());
    case 2: return Formula::oor(sub(), sub());
    case 3: return Formula::implies(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    case 5: return Formula::next(sub());
    case 6: return Formula::until(sub(), sub());
    case 7: return Formula::wprev(sub());
    case 8: return Formula::since(sub(), sub());
    case 9: return Formula::know(agent, sub());
    case 10: return Formula::common(sub());
    case 11: return Formula::everyone(sub());
    case 12: return Formula::sometime(sub());
    case 13: return Formula::always(sub());
    case 14: return Formula::once(sub());
    case 15: return Formula::sofar(sub());
    case 16: {
      Cmp c = static_cast<Cmp>(rng.range(0, 4));
      return Formula::prob(c, gen_threshold(rng, p), sub());
    }
    default: {
      Cmp c = static_cast<Cmp>(rng.range(0, 4));
      return Formula::proba(agent, c, gen_threshold(rng, p), sub());
    }
  }
}

Formula gen_formula(Rng& rng, const GenParams& p, const AgentSignature& sig,
                    const std::vector<std::string>& atoms) {
  return gen_formula(rng, p, sig, atoms, rng.range(p.min_depth, p.max_depth));
}

AxiomInstanceSpec gen_axiom_spec(AxiomId id, Rng& rng, const GenParams& p,
                                 const AgentSignature& sig,
                                 const std::vector<std::string>& atoms) {
  AxiomInstanceSpec s;
  int d = std::min(2, p.max_depth);
  s.a = gen_formula(rng, p, sig, atoms, rng.range(0, d));
  s.b = gen_formula(rng, p, sig, atoms, rng.range(0, d));
  s.g = gen_formula(rng, p, sig, atoms, rng.range(0, d));
  s.agent = sig.agents()[rng.below(sig.size())];
  s.m = static_cast<std::uint32_t>(rng.range(0, 3));
  s.primed = rng.chance(50);
  int den = rng.range(2, std::max(2, p.max_denominator));
  switch (id) {
    case AxiomId::AGP2:
    case AxiomId::AP2: {
      int nt = rng.range(1, den);
      int nr = rng.range(0, nt - 1);
      s.r = Rat(BigInt(nr), BigInt(den));
      s.t = Rat(BigInt(nt), BigInt(den));
      break;
    }
    case AxiomId::AGP5:
    case AxiomId::AP5: {
      int nr = rng.range(0, den);
      int nt = rng.range(0, den - nr);
      s.r = Rat(BigInt(nr), BigInt(den));
      s.t = Rat(BigInt(nt), BigInt(den));
      break;
    }
    default:
      s.r = gen_threshold(rng, p);
      s.t = gen_threshold(rng, p);
      break;
  }
  return s;
}

Formula gen_axiom_instance(AxiomId id, Rng& rng, const GenParams& p, const AgentSignature& sig,
                           const std::vector<std::string>& atoms) {
  return build_axiom_instance(id, gen_axiom_spec(id, rng, p, sig, atoms));
}

GeneratedProof gen_proof(Rng& rng, const GenParams& p, bool with_inf) {
  AgentSignature sig = gen_signature(p);
  std::vector<std::string> atoms = gen_atoms(p);
  GenParams small = p;
  small.max_depth = std::min(p.max_depth, 2);

  Proof pr;
  pr.sig = sig;
  pr.default_bound = 3;
  std::size_t counter = 0;
  auto fresh = [&]() { return "g" + std::to_string(counter++); };

  struct Entry {
    std::string id;
    Formula f;
    bool theorem;
  };
  std::vector<Entry> pool;

  auto add_step = [&](ProofStep s, bool thm) {
    if (s.id.empty()) s.id = fresh();
    pool.push_back({s.id, s.formula, thm});
    pr.steps.push_back(std::move(s));
    return pool.back().id;
  };
  auto add_hyp = [&](const Formula& f) {
    pr.theory.push_back(f);
    ProofStep s;
    s.kind = StepKind::Hyp;
    s.formula = f;
    return add_step(std::move(s), false);
  };
  auto add_prop = [&](const Formula& f) {
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.axiom = AxiomId::Prop;
    s.formula = f;
    return add_step(std::move(s), true);
  };
  auto add_mp = [&](const std::string& imp, const std::string& ant, const Formula& concl,
                    bool thm) {
    ProofStep s;
    s.kind = StepKind::MP;
    s.from = {imp, ant};
    s.formula = concl;
    return add_step(std::move(s), thm);
  };

  Formula alpha = gen_formula(rng, small, sig, atoms, rng.range(0, 2));
  std::string alpha_id = add_hyp(alpha);
  add_hyp(gen_formula(rng, small, sig, atoms, rng.range(0, 2)));

  // a couple of axiom-instance seeds
  for (int i = 0; i < 2; ++i) {
    AxiomId id = static_cast<AxiomId>(rng.range(1, static_cast<int>(kAxiomCount) - 1));
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.formula = gen_axiom_instance(id, rng, small, sig, atoms);
    add_step(std::move(s), true);
  }

  // make sure alpha contributes to the derivation
  {
    Formula rho = gen_formula(rng, small, sig, atoms, rng.range(0, 1));
    Formula goal = Formula::implies(rho, alpha);
    std::string t = add_prop(Formula::implies(alpha, goal));
    add_mp(t, alpha_id, goal, false);
  }

  if (with_inf) {
    // one infinitary step whose premises are hypotheses (tainted)
    Formula tau = Formula::tt();
    Formula phi = Formula::atom(atoms[rng.below(atoms.size())]);
    NestedContext ctx;
    ctx.B = {tau};
    ProofStep inf;
    inf.kind = StepKind::Inf;
    inf.ctx = ctx;
    inf.alpha = phi;
    inf.bound = pr.default_bound;
    switch (rng.range(0, 3)) {
      case 0:
        inf.inf = InfRule::RGA;
        inf.r = Rat(1);
        break;
      case 1:
        inf.inf = InfRule::RA;
        inf.r = Rat(1);
        inf.agent = sig.agents()[rng.below(sig.size())];
        break;
      case 2:
        inf.inf = InfRule::RC;
        break;
      default:
        inf.inf = InfRule::RU;
        inf.beta = gen_formula(rng, small, sig, atoms, 0);
        break;
    }
    std::uint64_t first = inf_first_index(inf.inf, inf.r);
    for (std::uint64_t i = first; i <= *inf.bound; ++i) {
      Formula prem = build_k_nested(ctx, inf_premise_template(inf.inf, inf, i));
      inf.premises[i] = add_hyp(prem);
    }
    inf.formula = build_k_nested(ctx, inf_conclusion_template(inf.inf, inf));
    std::string inf_id = add_step(std::move(inf), false);
    // peel the trivial antecedent off the conclusion
    const ProofStep& st = pr.steps[pr.steps.size() - 1];
    std::string taut = add_prop(tau);
    Formula bare = st.formula.child(1);
    add_mp(inf_id, taut, bare, false);
  }

  int extra = rng.range(2, 5);
  for (int i = 0; i < extra; ++i) {
    switch (rng.range(0, 2)) {
      case 0: {  // weaken a pool entry under a fresh antecedent
        const Entry e = pool[rng.below(pool.size())];
        Formula rho = gen_formula(rng, small, sig, atoms, rng.range(0, 1));
        Formula goal = Formula::implies(rho, e.f);
        std::string t = add_prop(Formula::implies(e.f, goal));
        add_mp(t, e.id, goal, e.theorem);
        break;
      }
      case 1: {  // conjoin two pool entries
        const Entry x = pool[rng.below(pool.size())];
        const Entry y = pool[rng.below(pool.size())];
        Formula goal = Formula::aand(x.f, y.f);
        std::string t = add_prop(
            Formula::implies(x.f, Formula::implies(y.f, goal)));
        std::string m1 =
            add_mp(t, x.id, Formula::implies(y.f, goal), x.theorem);
        add_mp(m1, y.id, goal, x.theorem && y.theorem);
        break;
      }
      default: {  // necessitate a theorem entry, if any
        std::vector<std::size_t> thms;
        for (std::size_t j = 0; j < pool.size(); ++j)
          if (pool[j].theorem) thms.push_back(j);
        if (thms.empty()) break;
        const Entry e = pool[thms[rng.below(thms.size())]];
        ProofStep s;
        s.kind = StepKind::Nec;
        s.from = {e.id};
        switch (rng.range(0, 4)) {
          case 0: s.nec = NecRule::RXN; s.formula = Formula::next(e.f); break;
          case 1: s.nec = NecRule::RZN; s.formula = Formula::wprev(e.f); break;
          case 2:
            s.nec = NecRule::RKN;
            s.agent = sig.agents()[rng.below(sig.size())];
            s.formula = Formula::know(s.agent, e.f);
            break;
          case 3: s.nec = NecRule::RGPN; s.formula = Formula::prob(Cmp::Ge, Rat(1), e.f); break;
          default:
            s.nec = NecRule::RPN;
            s.agent = sig.agents()[rng.below(sig.size())];
            s.formula = Formula::proba(s.agent, Cmp::Ge, Rat(1), e.f);
            break;
        }
        add_step(std::move(s), true);
        break;
      }
    }
  }
  return GeneratedProof{std::move(pr), alpha};
}

}  // namespace ptel
