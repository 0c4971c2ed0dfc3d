#include "ptel/transforms.hpp"

#include <stdexcept>
#include <unordered_map>

#include "ptel/syntax.hpp"

namespace ptel {

namespace {

struct Emitter {
  Proof out;
  std::size_t counter = 0;

  std::string fresh() { return "t" + std::to_string(counter++); }

  std::string emit(ProofStep s) {
    if (s.id.empty()) s.id = fresh();
    out.steps.push_back(std::move(s));
    return out.steps.back().id;
  }

  std::string prop(const Formula& f) {
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.axiom = AxiomId::Prop;
    s.formula = f;
    return emit(std::move(s));
  }

  std::string mp(const std::string& imp, const std::string& ant, const Formula& concl) {
    ProofStep s;
    s.kind = StepKind::MP;
    s.from = {imp, ant};
    s.formula = concl;
    return emit(std::move(s));
  }

  std::string hyp(const Formula& f) {
    ProofStep s;
    s.kind = StepKind::Hyp;
    s.formula = f;
    return emit(std::move(s));
  }
};

// Shared pre-analysis of a checked proof: expanded formulas, step index per
// id, theorem flags, and the implication operand of each MP step.
struct Analysis {
  std::vector<Formula> expanded;
  std::unordered_map<std::string, std::size_t> index_of;
  std::vector<bool> theorem;
  std::vector<std::size_t> mp_imp, mp_ant;

  Analysis(const Proof& p) {
    CheckResult cr = check_proof(p);
    if (!cr.ok()) throw std::invalid_argument("input proof does not check: " + cr.str());
    theorem = theorem_flags(p);
    mp_imp.assign(p.steps.size(), 0);
    mp_ant.assign(p.steps.size(), 0);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      const ProofStep& s = p.steps[i];
      expanded.push_back(expand(s.formula, p.sig));
      index_of[s.id] = i;
      if (s.kind == StepKind::MP) {
        std::size_t x = index_of[s.from[0]], y = index_of[s.from[1]];
        Formula want_x_ant =
            Formula::nnot(Formula::aand(expanded[x], Formula::nnot(expanded[i])));
        if (expanded[y] == want_x_ant) {
          mp_imp[i] = y;
          mp_ant[i] = x;
        } else {
          mp_imp[i] = x;
          mp_ant[i] = y;
        }
      }
    }
  }
};

// Copies a theorem-flagged step, remapping references through `map`.
ProofStep remap_step(const ProofStep& s, const std::string& new_id,
                     const std::unordered_map<std::size_t, std::string>& map,
                     const std::unordered_map<std::string, std::size_t>& index_of) {
  ProofStep c = s;
  c.id = new_id;
  for (std::string& ref : c.from) ref = map.at(index_of.at(ref));
  for (auto& [i, ref] : c.premises) ref = map.at(index_of.at(ref));
  return c;
}

}  // namespace

Proof deduction_transform(const Proof& input, const Formula& alpha) {
  Analysis an(input);
  Formula ea = expand(alpha, input.sig);
  bool designated = false;
  for (const Formula& t : input.theory) designated = designated || expand(t, input.sig) == ea;
  if (!designated)
    throw std::invalid_argument("deduction transform: alpha is not among the hypotheses");

  Emitter em;
  em.out.sig = input.sig;
  em.out.default_bound = input.default_bound;
  for (const Formula& t : input.theory)
    if (expand(t, input.sig) != ea) em.out.theory.push_back(t);

  std::unordered_map<std::size_t, std::string> verbatim;  // theorem steps only
  std::unordered_map<std::size_t, std::string> lifted;    // proves alpha -> phi_i

  auto weaken_over_alpha = [&](std::size_t i, const std::string& base_id) {
    const Formula& phi = input.steps[i].formula;
    Formula goal = Formula::implies(alpha, phi);
    std::string t = em.prop(Formula::implies(phi, goal));
    lifted[i] = em.mp(t, base_id, goal);
  };

  for (std::size_t i = 0; i < input.steps.size(); ++i) {
    const ProofStep& s = input.steps[i];
    const Formula& phi = s.formula;
    if (an.theorem[i]) {
      verbatim[i] = em.emit(remap_step(s, em.fresh(), verbatim, an.index_of));
      weaken_over_alpha(i, verbatim[i]);
      continue;
    }
    switch (s.kind) {
      case StepKind::Hyp: {
        if (an.expanded[i] == ea) {
          lifted[i] = em.prop(Formula::implies(alpha, phi));
        } else {
          std::string h = em.hyp(phi);
          weaken_over_alpha(i, h);
        }
        break;
      }
      case StepKind::MP: {
        std::size_t imp = an.mp_imp[i], ant = an.mp_ant[i];
        Formula goal = Formula::implies(alpha, phi);
        Formula lifted_imp = Formula::implies(alpha, input.steps[imp].formula);
        Formula lifted_ant = Formula::implies(alpha, input.steps[ant].formula);
        Formula dist = Formula::implies(lifted_imp, Formula::implies(lifted_ant, goal));
        std::string t = em.prop(dist);
        std::string m1 = em.mp(t, lifted.at(imp), Formula::implies(lifted_ant, goal));
        lifted[i] = em.mp(m1, lifted.at(ant), goal);
        break;
      }
      case StepKind::Inf: {
        NestedContext bar = s.ctx;
        bar.B.back() = Formula::aand(alpha, s.ctx.B.back());
        std::uint64_t n = s.bound.value_or(input.default_bound);
        ProofStep ns;
        ns.kind = StepKind::Inf;
        ns.inf = s.inf;
        ns.ctx = bar;
        ns.alpha = s.alpha;
        ns.beta = s.beta;
        ns.agent = s.agent;
        ns.r = s.r;
        ns.bound = n;
        for (std::uint64_t idx = inf_first_index(s.inf, s.r); idx <= n; ++idx) {
          std::size_t p = an.index_of.at(s.premises.at(idx));
          Formula lifted_prem = Formula::implies(alpha, input.steps[p].formula);
          Formula new_prem = build_k_nested(bar, inf_premise_template(s.inf, s, idx));
          std::string t = em.prop(Formula::implies(lifted_prem, new_prem));
          ns.premises[idx] = em.mp(t, lifted.at(p), new_prem);
        }
        ns.formula = build_k_nested(bar, inf_conclusion_template(s.inf, s));
        std::string inf_id = em.emit(std::move(ns));
        Formula goal = Formula::implies(alpha, phi);
        std::string t2 =
            em.prop(Formula::implies(build_k_nested(bar, inf_conclusion_template(s.inf, s)), goal));
        lifted[i] = em.mp(t2, inf_id, goal);
        break;
      }
      case StepKind::Axiom:
      case StepKind::Nec:
        // axiom and necessitation steps are always theorem-flagged
        throw std::logic_error("deduction transform: unexpected hypothesis-tainted step");
    }
  }
  return em.out;
}

namespace {

Formula apply_nested(const NestedOp& op, const Formula& f) {
  switch (op.kind) {
    case NestedOp::Kind::Next: return Formula::next(f);
    case NestedOp::Kind::WeakPrev: return Formula::wprev(f);
    case NestedOp::Kind::Know: return Formula::know(op.agent, f);
  }
  throw std::logic_error("bad nested op");
}

NecRule nec_rule_for(const NestedOp& op) {
  switch (op.kind) {
    case NestedOp::Kind::Next: return NecRule::RXN;
    case NestedOp::Kind::WeakPrev: return NecRule::RZN;
    case NestedOp::Kind::Know: return NecRule::RKN;
  }
  throw std::logic_error("bad nested op");
}

}  // namespace

Proof strong_necessitation_transform(const Proof& input, const NestedOp& op) {
  Analysis an(input);
  if (op.kind == NestedOp::Kind::Know && !input.sig.contains(op.agent))
    throw std::invalid_argument("strong necessitation: unknown agent " + op.agent);

  Emitter em;
  em.out.sig = input.sig;
  em.out.default_bound = input.default_bound;
  for (const Formula& t : input.theory) em.out.theory.push_back(apply_nested(op, t));

  std::unordered_map<std::size_t, std::string> verbatim;
  std::unordered_map<std::size_t, std::string> nlift;  // proves op phi_i

  auto nec_of = [&](const std::string& premise_id, const Formula& phi) {
    ProofStep s;
    s.kind = StepKind::Nec;
    s.nec = nec_rule_for(op);
    if (op.kind == NestedOp::Kind::Know) s.agent = op.agent;
    s.from = {premise_id};
    s.formula = apply_nested(op, phi);
    return em.emit(std::move(s));
  };

  for (std::size_t i = 0; i < input.steps.size(); ++i) {
    const ProofStep& s = input.steps[i];
    const Formula& phi = s.formula;
    if (an.theorem[i]) {
      verbatim[i] = em.emit(remap_step(s, em.fresh(), verbatim, an.index_of));
      nlift[i] = nec_of(verbatim[i], phi);
      continue;
    }
    switch (s.kind) {
      case StepKind::Hyp:
        nlift[i] = em.hyp(apply_nested(op, phi));
        break;
      case StepKind::MP: {
        std::size_t imp = an.mp_imp[i], ant = an.mp_ant[i];
        Formula op_ant = apply_nested(op, input.steps[ant].formula);
        Formula op_goal = apply_nested(op, phi);
        // distribution axiom: op(a -> b) -> (op a -> op b)
        Formula dist_inst = Formula::implies(
            apply_nested(op, Formula::implies(input.steps[ant].formula, phi)),
            Formula::implies(op_ant, op_goal));
        ProofStep d;
        d.kind = StepKind::Axiom;
        switch (op.kind) {
          case NestedOp::Kind::Next: d.axiom = AxiomId::AXImp; break;
          case NestedOp::Kind::WeakPrev: d.axiom = AxiomId::AZImp; break;
          case NestedOp::Kind::Know: d.axiom = AxiomId::AKImp; break;
        }
        d.formula = dist_inst;
        std::string dist_id = em.emit(std::move(d));
        // op(imp formula) is expand-equal to op(ant -> goal)
        std::string m1 = em.mp(dist_id, nlift.at(imp), Formula::implies(op_ant, op_goal));
        nlift[i] = em.mp(m1, nlift.at(ant), op_goal);
        break;
      }
      case StepKind::Inf: {
        NestedContext bar = s.ctx;
        Formula tail = s.ctx.B.back();
        Formula taut = Formula::oor(tail, Formula::nnot(tail));
        bar.B.push_back(taut);
        bar.X.push_back(op);
        std::uint64_t n = s.bound.value_or(input.default_bound);
        ProofStep ns;
        ns.kind = StepKind::Inf;
        ns.inf = s.inf;
        ns.ctx = bar;
        ns.alpha = s.alpha;
        ns.beta = s.beta;
        ns.agent = s.agent;
        ns.r = s.r;
        ns.bound = n;
        for (std::uint64_t idx = inf_first_index(s.inf, s.r); idx <= n; ++idx) {
          std::size_t p = an.index_of.at(s.premises.at(idx));
          Formula op_prem = apply_nested(op, input.steps[p].formula);
          Formula new_prem = build_k_nested(bar, inf_premise_template(s.inf, s, idx));
          std::string t = em.prop(Formula::implies(op_prem, new_prem));
          ns.premises[idx] = em.mp(t, nlift.at(p), new_prem);
        }
        Formula new_concl = build_k_nested(bar, inf_conclusion_template(s.inf, s));
        ns.formula = new_concl;
        std::string inf_id = em.emit(std::move(ns));
        std::string tt = em.prop(taut);
        nlift[i] = em.mp(inf_id, tt, apply_nested(op, phi));
        break;
      }
      case StepKind::Axiom:
      case StepKind::Nec:
        throw std::logic_error("strong necessitation: unexpected hypothesis-tainted step");
    }
  }
  return em.out;
}

}  // namespace ptel
