// Command-line front door: evaluation, model validation, proof checking,
// generation and the bundled fixtures.
//
// Exit codes: 0 success/true, 1 false/countermodel found, 2 usage or I/O
// error, 3 validation or proof-check rejection.  Diagnostics go to stderr,
// results to stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ptel/falsify.hpp"
#include "ptel/fixtures.hpp"
#include "ptel/gen.hpp"
#include "ptel/knested.hpp"
#include "ptel/model_json.hpp"
#include "ptel/oracle.hpp"
#include "ptel/proof_json.hpp"
#include "ptel/rank.hpp"
#include "ptel/semantics.hpp"
#include "ptel/soundness.hpp"
#include "ptel/syntax.hpp"
#include "ptel/transforms.hpp"

using namespace ptel;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRejected = 3;

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PTEL_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

// Theory files are newline-separated formulas; '#' starts a comment.
std::vector<Formula> load_theory(const std::string& path, const AgentSignature& sig) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open theory file: " + path);
  std::vector<Formula> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank) continue;
    try {
      out.push_back(parse(line, sig));
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

AgentSignature sig_from_flag(const std::vector<std::string>& agents) {
  if (agents.empty()) return AgentSignature({"a1"});
  return AgentSignature(agents);
}

Model load_and_validate(const std::string& path, bool must_be_clean = true) {
  Model m = load_model_file(path);
  if (must_be_clean) {
    auto violations = m.validate();
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << v.code << ": " << v.detail << "\n";
      throw ValidationFailure("model fails validation");
    }
  }
  return m;
}

GenParams params_from(std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for a probabilistic temporal epistemic logic"};
  app.require_subcommand(1);

  std::string model_path, proof_path, theory_path, formula_text, family, kind;
  std::vector<std::string> agents, betas, xops;
  std::uint32_t run = 0;
  std::uint64_t time = 0, budget = 10, trials = 50;
  std::uint64_t seed = default_seed();
  std::int64_t bound = -1;
  std::string core_text, mutate_name = "none";
  bool as_json = false;
  int depth = 3;

  auto* c_eval = app.add_subcommand("eval", "evaluate a formula at a world");
  c_eval->add_option("--model", model_path)->required();
  c_eval->add_option("--run", run)->required();
  c_eval->add_option("--time", time)->required();
  c_eval->add_option("--formula", formula_text)->required();

  auto* c_valid = app.add_subcommand("valid", "is the formula valid in the model");
  c_valid->add_option("--model", model_path)->required();
  c_valid->add_option("--formula", formula_text)->required();

  auto* c_conseq = app.add_subcommand("consequence", "does the theory entail the formula in the model");
  c_conseq->add_option("--model", model_path)->required();
  c_conseq->add_option("--theory", theory_path)->required();
  c_conseq->add_option("--formula", formula_text)->required();

  auto* c_falsify = app.add_subcommand("falsify", "search for a countermodel of theory |= formula");
  c_falsify->add_option("--theory", theory_path);
  c_falsify->add_option("--formula", formula_text)->required();
  c_falsify->add_option("--budget", budget);
  c_falsify->add_option("--seed", seed);
  c_falsify->add_option("--agents", agents)->delimiter(',');

  auto* c_checkm = app.add_subcommand("check-model", "validate a model file");
  c_checkm->add_option("--model", model_path)->required();

  auto* c_checkp = app.add_subcommand("check-proof", "check a proof file");
  c_checkp->add_option("--proof", proof_path)->required();
  c_checkp->add_option("--theory", theory_path);
  c_checkp->add_option("--bound", bound);

  auto* c_match = app.add_subcommand("axiom-match", "which axiom schemas match the formula");
  c_match->add_option("--formula", formula_text)->required();
  c_match->add_option("--agents", agents)->delimiter(',');

  auto* c_expand = app.add_subcommand("expand", "expand abbreviations into core operators");
  c_expand->add_option("--formula", formula_text)->required();
  c_expand->add_option("--agents", agents)->delimiter(',');

  auto* c_rank = app.add_subcommand("rank", "ordinal rank of the expanded formula");
  c_rank->add_option("--formula", formula_text)->required();
  c_rank->add_option("--agents", agents)->delimiter(',');

  auto* c_kn = app.add_subcommand("knested", "build or match k-nested implications");
  c_kn->add_option("mode", kind)->check(CLI::IsMember({"build", "match"}))->required();
  c_kn->add_option("--beta", betas, "context formulas b0..bk in order")->required();
  c_kn->add_option("--x", xops, "context operators X1..Xk (X, Z, K[a])");
  c_kn->add_option("--core", core_text, "core formula (build)");
  c_kn->add_option("--formula", formula_text, "formula to match (match)");
  c_kn->add_option("--agents", agents)->delimiter(',');

  auto* c_gen = app.add_subcommand("gen", "generate a random model or formula");
  c_gen->add_option("what", kind)->check(CLI::IsMember({"model", "formula"}))->required();
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--depth", depth);

  auto* c_sound = app.add_subcommand("soundness", "axiom/rule soundness fuzzing suite");
  c_sound->add_option("--trials", trials, "number of random models");
  c_sound->add_option("--seed", seed);
  c_sound->add_option("--mutate", mutate_name,
                      "corrupt one schema (none, akr-unguarded, agp2-flipped, axz-reversed)");
  c_sound->add_flag("--json", as_json);

  auto* c_fix = app.add_subcommand("fixtures", "bundled proofs and witnesses");
  c_fix->add_option("mode", kind)->check(CLI::IsMember({"run", "list", "export"}))->required();
  c_fix->add_option("--name", family, "fixture name (export)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_eval) {
      Model m = load_and_validate(model_path);
      Formula f = parse(formula_text, m.sig);
      Evaluator ev(m);
      if (run >= m.runs.size()) throw std::runtime_error("run index out of range");
      bool v = ev.holds(run, time, f);
      std::cout << (v ? "true" : "false") << "\n";
      return v ? kExitTrue : kExitFalse;
    }
    if (*c_valid) {
      Model m = load_and_validate(model_path);
      Formula f = parse(formula_text, m.sig);
      Evaluator ev(m);
      if (ev.valid_in_model(f)) {
        std::cout << "valid\n";
        return kExitTrue;
      }
      auto w = ev.find_consequence_failure({}, f);
      std::cout << "not valid at (run " << w->run << ", time " << w->time << ")\n";
      return kExitFalse;
    }
    if (*c_conseq) {
      Model m = load_and_validate(model_path);
      Formula f = parse(formula_text, m.sig);
      std::vector<Formula> theory = load_theory(theory_path, m.sig);
      Evaluator ev(m);
      auto w = ev.find_consequence_failure(theory, f);
      if (!w) {
        std::cout << "consequence\n";
        return kExitTrue;
      }
      std::cout << "not a consequence at (run " << w->run << ", time " << w->time << ")\n";
      return kExitFalse;
    }
    if (*c_falsify) {
      AgentSignature sig = sig_from_flag(agents);
      std::vector<Formula> theory;
      if (!theory_path.empty()) theory = load_theory(theory_path, sig);
      Formula goal = parse(formula_text, sig);
      GenParams p = params_from(seed);
      p.agent_count = static_cast<int>(sig.size());
      auto cm = falsify(theory, goal, budget, p);
      if (!cm) {
        std::cout << "no countermodel found within budget " << budget << "\n";
        return kExitTrue;
      }
      std::cout << "countermodel (seed " << cm->seed << ") at (run " << cm->run << ", time "
                << cm->time << ")\n";
      std::cout << model_to_json(cm->model) << "\n";
      return kExitFalse;
    }
    if (*c_checkm) {
      Model m = load_model_file(model_path);
      auto violations = m.validate();
      if (violations.empty()) {
        std::cout << "model ok: " << m.runs.size() << " runs, " << m.world_count()
                  << " canonical worlds\n";
        return kExitTrue;
      }
      for (const auto& v : violations) std::cout << v.code << ": " << v.detail << "\n";
      return kExitRejected;
    }
    if (*c_checkp) {
      Proof p = load_proof_file(proof_path);
      std::vector<Formula> extra;
      if (!theory_path.empty()) extra = load_theory(theory_path, p.sig);
      std::optional<std::uint64_t> ob;
      if (bound >= 0) ob = static_cast<std::uint64_t>(bound);
      CheckResult r = check_proof(p, extra, ob);
      std::cout << r.str() << "\n";
      return r.ok() ? kExitTrue : kExitRejected;
    }
    if (*c_match) {
      AgentSignature sig = sig_from_flag(agents);
      Formula f = expand(parse(formula_text, sig), sig);
      auto ms = match_axiom(f, sig);
      if (ms.empty()) {
        std::cout << "none\n";
        return kExitFalse;
      }
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << axiom_name(ms[i].id);
        if (ms[i].m) std::cout << "(m=" << *ms[i].m << ")";
      }
      std::cout << "\n";
      return kExitTrue;
    }
    if (*c_expand) {
      AgentSignature sig = sig_from_flag(agents);
      std::cout << print(expand(parse(formula_text, sig), sig)) << "\n";
      return kExitTrue;
    }
    if (*c_rank) {
      AgentSignature sig = sig_from_flag(agents);
      std::cout << rank(expand(parse(formula_text, sig), sig)).str() << "\n";
      return kExitTrue;
    }
    if (*c_kn) {
      AgentSignature sig = sig_from_flag(agents);
      NestedContext ctx;
      for (const std::string& bt : betas) ctx.B.push_back(parse(bt, sig));
      for (const std::string& xt : xops) {
        auto op = NestedOp::parse(xt);
        if (!op) throw std::runtime_error("bad context operator: " + xt);
        if (op->kind == NestedOp::Kind::Know && !sig.contains(op->agent))
          throw std::runtime_error("unknown agent in context operator: " + xt);
        ctx.X.push_back(*op);
      }
      if (!ctx.well_formed())
        throw std::runtime_error("need k+1 --beta entries and k --x entries");
      if (kind == "build") {
        if (core_text.empty()) throw std::runtime_error("build needs --core");
        std::cout << print(build_k_nested(ctx, parse(core_text, sig))) << "\n";
        return kExitTrue;
      }
      if (formula_text.empty()) throw std::runtime_error("match needs --formula");
      auto core = match_k_nested(parse(formula_text, sig), ctx);
      if (!core) {
        std::cout << "no match\n";
        return kExitFalse;
      }
      std::cout << print(*core) << "\n";
      return kExitTrue;
    }
    if (*c_gen) {
      GenParams p = params_from(seed);
      if (kind == "model") {
        std::cout << model_to_json(gen_model(p)) << "\n";
      } else {
        Rng rng(seed);
        p.max_depth = depth;
        std::cout << print(gen_formula(rng, p, gen_signature(p), gen_atoms(p))) << "\n";
      }
      return kExitTrue;
    }
    if (*c_sound) {
      SoundnessConfig cfg;
      cfg.gen = params_from(seed);
      cfg.models = static_cast<int>(trials);
      auto mut = mutation_from_name(mutate_name);
      if (!mut) throw std::runtime_error("unknown mutation: " + mutate_name);
      cfg.mutate = *mut;
      SoundnessReport rep = run_soundness(cfg);
      std::cout << (as_json ? rep.json() : rep.text());
      return rep.ok() ? kExitTrue : kExitFalse;
    }
    if (*c_fix) {
      auto proofs = bundled_proofs();
      if (kind == "list") {
        for (const auto& [name, _] : proofs) std::cout << name << "\n";
        return kExitTrue;
      }
      if (kind == "export") {
        auto it = proofs.find(family);
        if (it == proofs.end()) throw std::runtime_error("unknown fixture: " + family);
        std::cout << proof_to_json(it->second) << "\n";
        return kExitTrue;
      }
      bool all_ok = true;
      for (const auto& [name, proof] : proofs) {
        CheckResult r = check_proof(proof);
        std::cout << "proof " << name << ": " << r.str() << "\n";
        all_ok = all_ok && r.ok();
      }
      for (const std::string& fam : {"next", "common", "prob"}) {
        bool ok = true;
        for (int k = 0; k <= 20 && ok; ++k) {
          Witness w = make_witness(fam, k);
          if (!w.model.validate().empty()) {
            ok = false;
            break;
          }
          Evaluator ev(w.model);
          for (const Formula& f : w.formulas) ok = ok && ev.holds(w.run, w.time, f);
        }
        std::cout << "witness family " << fam << " (k <= 20): " << (ok ? "satisfied" : "FAILED")
                  << "\n";
        all_ok = all_ok && ok;
      }
      return all_ok ? kExitTrue : kExitRejected;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitRejected;
  } catch (const ModelFormatError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProofFormatError& e) {
    std::cerr << "proof error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
