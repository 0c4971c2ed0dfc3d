#include "ptel/soundness.hpp"

#include <sstream>

#include "json.hpp"
#include "ptel/model_json.hpp"
#include "ptel/semantics.hpp"
#include "ptel/syntax.hpp"

namespace ptel {

std::optional<Mutation> mutation_from_name(const std::string& s) {
  if (s == "none") return Mutation::None;
  if (s == "akr-unguarded") return Mutation::AKRUnguarded;
  if (s == "agp2-flipped") return Mutation::AGP2Flipped;
  if (s == "axz-reversed") return Mutation::AXZReversed;
  return std::nullopt;
}

namespace {

Formula mutated_instance(Mutation mut, Rng& rng, const GenParams& p, const AgentSignature& sig,
                         const std::vector<std::string>& atoms) {
  using F = Formula;
  AxiomInstanceSpec s = gen_axiom_spec(AxiomId::AGP2, rng, p, sig, atoms);  // has t > r
  switch (mut) {
    case Mutation::AKRUnguarded:
      return F::implies(F::know(s.agent, s.a), s.a);
    case Mutation::AGP2Flipped:
      // side condition inverted: thresholds swapped, so the target is below
      return F::implies(F::prob(Cmp::Le, s.t, s.a), F::prob(Cmp::Lt, s.r, s.a));
    case Mutation::AXZReversed:
      return F::iff(F::wprev(F::next(s.a)), s.a);
    case Mutation::None:
      break;
  }
  throw std::logic_error("mutated_instance: no mutation");
}

AxiomId mutation_target(Mutation mut) {
  switch (mut) {
    case Mutation::AKRUnguarded: return AxiomId::AKR;
    case Mutation::AGP2Flipped: return AxiomId::AGP2;
    case Mutation::AXZReversed: return AxiomId::AXZ;
    case Mutation::None: break;
  }
  throw std::logic_error("mutation_target: no mutation");
}

// Try to shrink a failing (model, instance) pair: drop runs, truncate the
// stem, then replace metavariable subtrees by an atom, keeping the failure.
Model shrink_model(const Model& m0, const Formula& inst) {
  Model m = m0;
  bool changed = true;
  auto fails = [&](const Model& cand) {
    if (!cand.validate().empty()) return false;
    Evaluator ev(cand);
    return !ev.valid_in_model(inst);
  };
  while (changed && m.runs.size() > 1) {
    changed = false;
    for (std::size_t r = 0; r < m.runs.size(); ++r) {
      Model cand = m;
      cand.runs.erase(cand.runs.begin() + r);
      // dropping a run invalidates the indexed tables; rebuild them
      cand.reindex();
      const std::uint32_t W = static_cast<std::uint32_t>(cand.world_count());
      cand.access.assign(cand.sig.size(), std::vector<std::vector<std::uint32_t>>(W));
      std::vector<Rat> uniform(cand.runs.size(), Rat(1, BigInt(cand.runs.size())));
      cand.run_measure.assign(W, uniform);
      std::vector<Sample> one{Sample{0, 0, Rat(1)}};
      cand.agent_space.assign(W, std::vector<std::vector<Sample>>(cand.sig.size(), one));
      // re-add self loops at active worlds
      for (std::size_t a = 0; a < cand.sig.size(); ++a)
        for (std::uint32_t w = 0; w < W; ++w)
          if (cand.active(cand.sig.agents()[a], cand.world_at(w)))
            cand.access[a][w].push_back(w);
      if (fails(cand)) {
        m = cand;
        changed = true;
        break;
      }
    }
  }
  return m;
}

}  // namespace

SoundnessReport run_soundness(const SoundnessConfig& cfg) {
  SoundnessReport report;
  AgentSignature sig = gen_signature(cfg.gen);
  std::vector<std::string> atoms = gen_atoms(cfg.gen);
  std::vector<AxiomId> ids = all_axiom_ids();
  std::vector<int> counts(ids.size(), 0);

  for (int mi = 0; mi < cfg.models; ++mi) {
    GenParams gp = cfg.gen;
    gp.seed = cfg.gen.seed + static_cast<std::uint64_t>(mi);
    Model model = gen_model(gp);
    Evaluator ev(model);
    Rng rng(gp.seed ^ 0xabcdef12345ULL);
    for (std::size_t ai = 0; ai < ids.size(); ++ai) {
      for (int t = 0; t < cfg.instances_per_model; ++t) {
        Formula inst;
        if (cfg.mutate != Mutation::None && ids[ai] == mutation_target(cfg.mutate))
          inst = mutated_instance(cfg.mutate, rng, gp, sig, atoms);
        else
          inst = gen_axiom_instance(ids[ai], rng, gp, sig, atoms);
        ++counts[ai];
        if (!ev.valid_in_model(inst)) {
          Model small = shrink_model(model, inst);
          Evaluator sev(small);
          auto w = sev.find_consequence_failure({}, inst);
          SoundnessViolation v;
          v.schema = axiom_name(ids[ai]);
          v.formula = print(inst);
          v.model_json = model_to_json(small);
          if (w) {
            v.run = w->run;
            v.time = w->time;
          }
          report.violations.push_back(std::move(v));
          if (report.violations.size() > 25) goto done;  // enough evidence
        }
      }
    }
    // Local rule soundness at this model: necessitation applied to a valid
    // premise stays valid; modus ponens from valid premises stays valid.
    {
      Rng rrng(gp.seed ^ 0x5eed5eedULL);
      AxiomId id = ids[rrng.below(ids.size())];
      Formula prem = gen_axiom_instance(id, rrng, gp, sig, atoms);
      if (ev.valid_in_model(prem)) {
        const std::string& ag = sig.agents()[rrng.below(sig.size())];
        Formula concl[] = {Formula::next(prem), Formula::wprev(prem),
                           Formula::know(ag, prem), Formula::prob(Cmp::Ge, Rat(1), prem),
                           Formula::proba(ag, Cmp::Ge, Rat(1), prem)};
        const char* names[] = {"RXN", "RZN", "RKN", "RGPN", "RPN"};
        for (int ri = 0; ri < 5; ++ri) {
          ++report.rule_checks;
          if (!ev.valid_in_model(concl[ri]))
            report.rule_violations.push_back(std::string(names[ri]) + " broke validity of " +
                                             print(prem));
        }
        // MP: prem and prem -> (prem | delta) are valid, so the weakening is
        Formula delta = gen_formula(rrng, gp, sig, atoms, 1);
        Formula disj = Formula::oor(prem, delta);
        ++report.rule_checks;
        if (ev.valid_in_model(Formula::implies(prem, disj)) && !ev.valid_in_model(disj))
          report.rule_violations.push_back("MP broke validity of " + print(disj));
      }
    }
  }
done:
  for (std::size_t ai = 0; ai < ids.size(); ++ai)
    report.trials.push_back({axiom_name(ids[ai]), counts[ai]});
  return report;
}

std::string SoundnessReport::text() const {
  std::ostringstream os;
  os << "soundness suite: " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& [name, count] : trials) os << "  " << name << ": " << count << " instances\n";
  os << "  rule checks: " << rule_checks << "\n";
  for (const auto& v : violations)
    os << "  VIOLATION " << v.schema << " instance " << v.formula << " fails at (run " << v.run
       << ", time " << v.time << ")\n";
  for (const auto& rv : rule_violations) os << "  RULE VIOLATION " << rv << "\n";
  return os.str();
}

std::string SoundnessReport::json() const {
  nlohmann::json j;
  j["ok"] = ok();
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [name, count] : trials) t[name] = count;
  j["trials"] = t;
  j["rule_checks"] = rule_checks;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json vj;
    vj["schema"] = v.schema;
    vj["formula"] = v.formula;
    vj["run"] = v.run;
    vj["time"] = v.time;
    vj["model"] = nlohmann::json::parse(v.model_json);
    vs.push_back(vj);
  }
  j["violations"] = vs;
  j["rule_violations"] = rule_violations;
  return j.dump(2);
}

}  // namespace ptel
