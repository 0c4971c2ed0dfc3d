#include "ptel/proof.hpp"

#include <algorithm>
#include <unordered_map>

#include "ptel/syntax.hpp"

namespace ptel {

const char* nec_rule_name(NecRule r) {
  switch (r) {
    case NecRule::RXN: return "RXN";
    case NecRule::RZN: return "RZN";
    case NecRule::RKN: return "RKN";
    case NecRule::RGPN: return "RGPN";
    case NecRule::RPN: return "RPN";
  }
  return "?";
}

std::optional<NecRule> nec_rule_from_name(const std::string& s) {
  for (NecRule r : {NecRule::RXN, NecRule::RZN, NecRule::RKN, NecRule::RGPN, NecRule::RPN})
    if (s == nec_rule_name(r)) return r;
  return std::nullopt;
}

const char* inf_rule_name(InfRule r) {
  switch (r) {
    case InfRule::RU: return "RU";
    case InfRule::RS: return "RS";
    case InfRule::RC: return "RC";
    case InfRule::RGA: return "RGA";
    case InfRule::RA: return "RA";
  }
  return "?";
}

std::optional<InfRule> inf_rule_from_name(const std::string& s) {
  for (InfRule r : {InfRule::RU, InfRule::RS, InfRule::RC, InfRule::RGA, InfRule::RA})
    if (s == inf_rule_name(r)) return r;
  return std::nullopt;
}

std::string CheckResult::str() const {
  switch (status) {
    case Status::Verified: return "Verified";
    case Status::VerifiedBounded: return "VerifiedBounded(" + std::to_string(bound) + ")";
    case Status::Rejected: return "Rejected(step " + step_id + ": " + reason + ")";
  }
  return "?";
}

Formula inf_premise_template(InfRule rule, const ProofStep& step, std::uint64_t i) {
  using F = Formula;
  switch (rule) {
    case InfRule::RU: {
      // ~((X^0 a & ... & X^{i-1} a) & X^i b); empty blocks are dropped.
      std::vector<Formula> parts;
      for (std::uint64_t l = 0; l < i; ++l) parts.push_back(F::next_n(step.alpha, l));
      parts.push_back(F::next_n(step.beta, i));
      return F::nnot(F::conj(parts));
    }
    case InfRule::RS: {
      // ~((Z^0 a & ... & Z^{i-1} a) & (~Z^0(a&~a) & ... & ~Z^i(a&~a)) & Z^i b)
      Formula contra = F::aand(step.alpha, F::nnot(step.alpha));
      std::vector<Formula> parts;
      for (std::uint64_t l = 0; l < i; ++l) parts.push_back(F::wprev_n(step.alpha, l));
      for (std::uint64_t l = 0; l <= i; ++l) parts.push_back(F::nnot(F::wprev_n(contra, l)));
      parts.push_back(F::wprev_n(step.beta, i));
      return F::nnot(F::conj(parts));
    }
    case InfRule::RC:
      return F::everyone_n(step.alpha, i);
    case InfRule::RGA:
      return F::prob(Cmp::Ge, step.r - Rat(1, BigInt(i)), step.alpha);
    case InfRule::RA:
      return F::proba(step.agent, Cmp::Ge, step.r - Rat(1, BigInt(i)), step.alpha);
  }
  throw std::logic_error("inf_premise_template: unhandled rule");
}

Formula inf_conclusion_template(InfRule rule, const ProofStep& step) {
  using F = Formula;
  switch (rule) {
    case InfRule::RU: return F::nnot(F::until(step.alpha, step.beta));
    case InfRule::RS: return F::nnot(F::since(step.alpha, step.beta));
    case InfRule::RC: return F::common(step.alpha);
    case InfRule::RGA: return F::prob(Cmp::Ge, step.r, step.alpha);
    case InfRule::RA: return F::proba(step.agent, Cmp::Ge, step.r, step.alpha);
  }
  throw std::logic_error("inf_conclusion_template: unhandled rule");
}

std::uint64_t inf_first_index(InfRule rule, const Rat& r) {
  if (rule == InfRule::RGA || rule == InfRule::RA) return std::max<std::uint64_t>(1, ceil_to_u64(Rat(1) / r));
  return 0;
}

namespace {

struct Checker {
  const Proof& proof;
  std::span<const Formula> extra_theory;
  std::optional<std::uint64_t> bound_override;
  std::unordered_map<std::string, std::size_t> index_of;
  std::vector<Formula> expanded;  // expanded formula per step
  std::vector<bool> theorem;
  std::vector<Formula> expanded_theory;

  CheckResult reject(const ProofStep& s, const std::string& why) {
    CheckResult r;
    r.status = CheckResult::Status::Rejected;
    r.step_id = s.id;
    r.reason = why;
    return r;
  }

  Formula expandf(const Formula& f) { return expand(f, proof.sig); }

  bool expand_eq(const Formula& a, const Formula& b) { return expandf(a) == expandf(b); }

  std::optional<std::size_t> earlier(const ProofStep& s, const std::string& ref,
                                     std::size_t self) {
    auto it = index_of.find(ref);
    if (it == index_of.end() || it->second >= self) return std::nullopt;
    (void)s;
    return it->second;
  }

  CheckResult run() {
    for (const Formula& t : proof.theory) expanded_theory.push_back(expandf(t));
    for (const Formula& t : extra_theory) expanded_theory.push_back(expandf(t));

    bool any_inf = false;
    std::uint64_t min_bound = 0;
    bool first_inf = true;

    for (std::size_t idx = 0; idx < proof.steps.size(); ++idx) {
      const ProofStep& s = proof.steps[idx];
      if (!s.formula.valid()) return reject(s, "step has no formula");
      if (index_of.count(s.id)) return reject(s, "duplicate step id");
      Formula ef = expandf(s.formula);
      bool thm = true;

      switch (s.kind) {
        case StepKind::Axiom: {
          std::vector<AxiomMatch> ms = match_axiom(ef, proof.sig);
          if (ms.empty()) return reject(s, "formula is not an instance of any axiom schema");
          if (s.axiom) {
            bool found = false;
            for (const AxiomMatch& m : ms) found = found || m.id == *s.axiom;
            if (!found)
              return reject(s, std::string("formula is not an instance of ") +
                                   axiom_name(*s.axiom));
          }
          break;
        }
        case StepKind::Hyp: {
          bool found = false;
          for (const Formula& t : expanded_theory) found = found || t == ef;
          if (!found) return reject(s, "hypothesis is not in the theory");
          thm = false;
          break;
        }
        case StepKind::MP: {
          if (s.from.size() != 2) return reject(s, "modus ponens needs two premises");
          auto i = earlier(s, s.from[0], idx);
          auto j = earlier(s, s.from[1], idx);
          if (!i || !j) return reject(s, "premise reference must point to an earlier step");
          Formula want_ij =
              Formula::nnot(Formula::aand(expanded[*i], Formula::nnot(ef)));
          Formula want_ji =
              Formula::nnot(Formula::aand(expanded[*j], Formula::nnot(ef)));
          if (expanded[*j] == want_ij)
            thm = theorem[*i] && theorem[*j];
          else if (expanded[*i] == want_ji)
            thm = theorem[*i] && theorem[*j];
          else
            return reject(s, "conclusion does not follow by modus ponens");
          break;
        }
        case StepKind::Nec: {
          if (s.from.size() != 1) return reject(s, "necessitation needs one premise");
          auto i = earlier(s, s.from[0], idx);
          if (!i) return reject(s, "premise reference must point to an earlier step");
          if (!theorem[*i]) return reject(s, "necessitation premise is not a theorem");
          Formula want;
          switch (s.nec) {
            case NecRule::RXN: want = Formula::next(expanded[*i]); break;
            case NecRule::RZN: want = Formula::wprev(expanded[*i]); break;
            case NecRule::RKN:
              if (!proof.sig.contains(s.agent)) return reject(s, "unknown agent " + s.agent);
              want = Formula::know(s.agent, expanded[*i]);
              break;
            case NecRule::RGPN: want = Formula::prob(Cmp::Ge, Rat(1), expanded[*i]); break;
            case NecRule::RPN:
              if (!proof.sig.contains(s.agent)) return reject(s, "unknown agent " + s.agent);
              want = Formula::proba(s.agent, Cmp::Ge, Rat(1), expanded[*i]);
              break;
          }
          if (ef != want) return reject(s, "conclusion does not match the necessitation rule");
          thm = true;  // premise was a theorem
          break;
        }
        case StepKind::Inf: {
          if (!s.ctx.well_formed()) return reject(s, "malformed nested context");
          for (const NestedOp& op : s.ctx.X)
            if (op.kind == NestedOp::Kind::Know && !proof.sig.contains(op.agent))
              return reject(s, "context names unknown agent " + op.agent);
          if (!s.alpha.valid()) return reject(s, "infinitary rule needs parameter alpha");
          if ((s.inf == InfRule::RU || s.inf == InfRule::RS) && !s.beta.valid())
            return reject(s, "rule needs parameter beta");
          if (s.inf == InfRule::RGA || s.inf == InfRule::RA) {
            if (s.r <= Rat(0) || s.r > Rat(1))
              return reject(s, "Archimedean rule requires r in (0,1]");
          }
          if (s.inf == InfRule::RA && !proof.sig.contains(s.agent))
            return reject(s, "unknown agent " + s.agent);
          std::uint64_t n = bound_override ? *bound_override
                                           : s.bound.value_or(proof.default_bound);
          std::uint64_t first = inf_first_index(s.inf, s.r);
          if (n < first) return reject(s, "declared bound is below the first premise index");
          for (std::uint64_t i = first; i <= n; ++i) {
            auto it = s.premises.find(i);
            if (it == s.premises.end())
              return reject(s, "missing premise for index " + std::to_string(i));
            auto pi = earlier(s, it->second, idx);
            if (!pi) return reject(s, "premise reference must point to an earlier step");
            Formula want = build_k_nested(s.ctx, inf_premise_template(s.inf, s, i));
            if (!expand_eq(proof.steps[*pi].formula, want))
              return reject(s, "premise " + std::to_string(i) +
                                   " does not match the rule template");
            thm = thm && theorem[*pi];
          }
          Formula want_concl = build_k_nested(s.ctx, inf_conclusion_template(s.inf, s));
          if (!expand_eq(s.formula, want_concl))
            return reject(s, "conclusion does not match the rule");
          any_inf = true;
          min_bound = first_inf ? n : std::min(min_bound, n);
          first_inf = false;
          break;
        }
      }

      index_of[s.id] = idx;
      expanded.push_back(std::move(ef));
      theorem.push_back(thm);
    }

    if (proof.steps.empty()) {
      CheckResult r;
      r.status = CheckResult::Status::Rejected;
      r.step_id = "-";
      r.reason = "empty proof";
      return r;
    }
    CheckResult r;
    if (any_inf) {
      r.status = CheckResult::Status::VerifiedBounded;
      r.bound = min_bound;
    } else {
      r.status = CheckResult::Status::Verified;
    }
    return r;
  }
};

}  // namespace

CheckResult check_proof(const Proof& proof, std::span<const Formula> extra_theory,
                        std::optional<std::uint64_t> bound_override) {
  Checker c{proof, extra_theory, bound_override, {}, {}, {}, {}};
  return c.run();
}

std::vector<bool> theorem_flags(const Proof& proof) {
  std::unordered_map<std::string, std::size_t> index_of;
  std::vector<bool> thm(proof.steps.size(), true);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    bool t = true;
    if (s.kind == StepKind::Hyp) t = false;
    for (const std::string& ref : s.from) {
      auto it = index_of.find(ref);
      if (it != index_of.end()) t = t && thm[it->second];
    }
    for (const auto& [_, ref] : s.premises) {
      auto it = index_of.find(ref);
      if (it != index_of.end()) t = t && thm[it->second];
    }
    thm[i] = t;
    index_of[s.id] = i;
  }
  return thm;
}

}  // namespace ptel
