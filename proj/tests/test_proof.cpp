#include "doctest.h"
#include "ptel/fixtures.hpp"
#include "ptel/gen.hpp"
#include "ptel/proof_json.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

namespace {

Proof one_axiom_proof() {
  Proof p;
  p.sig = AgentSignature({"a1"});
  ProofStep s;
  s.id = "s0";
  s.kind = StepKind::Axiom;
  s.axiom = AxiomId::Prop;
  s.formula = parse("p -> p", p.sig);
  p.steps.push_back(s);
  return p;
}

}  // namespace

TEST_CASE("check: a single propositional axiom verifies") {
  CheckResult r = check_proof(one_axiom_proof());
  CHECK(r.status == CheckResult::Status::Verified);
  CHECK(r.str() == "Verified");
}

TEST_CASE("check: modus ponens shape") {
  Proof p;
  p.sig = AgentSignature({"a1"});
  Formula a = parse("p", p.sig), b = parse("q", p.sig);
  p.theory = {a, Formula::implies(a, b)};
  ProofStep h1{.id = "h1", .kind = StepKind::Hyp, .formula = a};
  ProofStep h2{.id = "h2", .kind = StepKind::Hyp, .formula = Formula::implies(a, b)};
  ProofStep m{.id = "m", .kind = StepKind::MP, .formula = b};
  m.from = {"h2", "h1"};
  p.steps = {h1, h2, m};
  CHECK(check_proof(p).ok());
  // wrong conclusion
  p.steps[2].formula = parse("r", p.sig);
  CheckResult r = check_proof(p);
  CHECK_FALSE(r.ok());
  CHECK(r.step_id == "m");
}

TEST_CASE("check: necessitation requires a theorem premise") {
  Proof p;
  p.sig = AgentSignature({"a1"});
  Formula a = parse("p", p.sig);
  p.theory = {a};
  ProofStep h{.id = "h", .kind = StepKind::Hyp, .formula = a};
  ProofStep n{.id = "n", .kind = StepKind::Nec, .formula = Formula::next(a)};
  n.nec = NecRule::RXN;
  n.from = {"h"};
  p.steps = {h, n};
  CheckResult r = check_proof(p);
  CHECK_FALSE(r.ok());
  CHECK(r.reason.find("not a theorem") != std::string::npos);
  // the same step over a propositional axiom is fine
  p.steps[0] = ProofStep{.id = "h", .kind = StepKind::Axiom, .formula = parse("p -> p", p.sig)};
  p.steps[1].formula = Formula::next(parse("p -> p", p.sig));
  CHECK(check_proof(p).ok());
}

TEST_CASE("check: references must point backward") {
  Proof p = one_axiom_proof();
  ProofStep n{.id = "n", .kind = StepKind::Nec, .formula = Formula::next(p.steps[0].formula)};
  n.nec = NecRule::RXN;
  n.from = {"zz"};
  p.steps.push_back(n);
  CHECK_FALSE(check_proof(p).ok());
  p.steps[1].from = {"n"};  // self-reference
  CHECK_FALSE(check_proof(p).ok());
}

TEST_CASE("check: axiom pin is honored") {
  Proof p = one_axiom_proof();
  p.steps[0].axiom = AxiomId::AGP1;
  CHECK_FALSE(check_proof(p).ok());
}

TEST_CASE("example1 checks as VerifiedBounded and degrades gracefully") {
  Proof ex1 = bundled_proofs().at("example1");
  CheckResult r = check_proof(ex1);
  CHECK(r.status == CheckResult::Status::VerifiedBounded);
  CHECK(r.bound == 100);
  CHECK(r.str() == "VerifiedBounded(100)");
  // a lower bound override still verifies (premises beyond it are ignored)
  CheckResult r50 = check_proof(ex1, {}, 50);
  CHECK(r50.status == CheckResult::Status::VerifiedBounded);
  CHECK(r50.bound == 50);
  // a higher bound has no premises to draw on
  CHECK_FALSE(check_proof(ex1, {}, 101).ok());
}

TEST_CASE("example1: corrupting any sampled step rejects") {
  Proof ex1 = bundled_proofs().at("example1");
  for (std::size_t i = 0; i < ex1.steps.size(); i += 7) {
    Proof bad = ex1;
    bad.steps[i].formula = Formula::atom("zz");
    CAPTURE(i, bad.steps[i].id);
    CHECK_FALSE(check_proof(bad).ok());
  }
}

TEST_CASE("example1: theory is the expected family") {
  Proof ex1 = bundled_proofs().at("example1");
  AgentSignature sig = ex1.sig;
  Formula aa = Formula::atom("aa");
  REQUIRE(ex1.theory.size() == 101);
  CHECK(expand(ex1.theory[0], sig) ==
        expand(Formula::nnot(Formula::prob(Cmp::Eq, Rat(0), aa)), sig));
  for (std::uint64_t k = 1; k <= 100; ++k)
    CHECK(expand(ex1.theory[k], sig) ==
          expand(Formula::prob(Cmp::Le, Rat(1, BigInt(k)), aa), sig));
}

TEST_CASE("infinitary steps: template mismatches are caught") {
  Proof ex1 = bundled_proofs().at("example1");
  // find the inf step and break one premise reference
  for (ProofStep& s : ex1.steps)
    if (s.kind == StepKind::Inf) {
      s.premises[37] = s.premises[36];
      break;
    }
  CheckResult r = check_proof(ex1);
  CHECK_FALSE(r.ok());
  CHECK(r.reason.find("template") != std::string::npos);
}

TEST_CASE("infinitary side condition: Archimedean threshold range") {
  Proof p;
  p.sig = AgentSignature({"a1"});
  ProofStep inf;
  inf.id = "i";
  inf.kind = StepKind::Inf;
  inf.inf = InfRule::RGA;
  inf.ctx.B = {Formula::tt()};
  inf.alpha = Formula::atom("p");
  inf.r = Rat(0);
  inf.bound = 2;
  inf.formula = Formula::implies(Formula::tt(), Formula::prob(Cmp::Ge, Rat(0), Formula::atom("p")));
  p.steps = {inf};
  CheckResult r = check_proof(p);
  CHECK_FALSE(r.ok());
  CHECK(r.reason.find("(0,1]") != std::string::npos);
}

TEST_CASE("theorem flags: false exactly on hypothesis ancestry") {
  Rng rng(7);
  GenParams gp;
  for (int t = 0; t < 30; ++t) {
    GeneratedProof g = gen_proof(rng, gp, t % 3 == 0);
    REQUIRE(check_proof(g.proof).ok());
    std::vector<bool> flags = theorem_flags(g.proof);
    // recompute by explicit ancestry walk
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < g.proof.steps.size(); ++i) idx[g.proof.steps[i].id] = i;
    std::function<bool(std::size_t)> tainted = [&](std::size_t i) -> bool {
      const ProofStep& s = g.proof.steps[i];
      if (s.kind == StepKind::Hyp) return true;
      for (const auto& ref : s.from)
        if (tainted(idx[ref])) return true;
      for (const auto& [_, ref] : s.premises)
        if (tainted(idx[ref])) return true;
      return false;
    };
    for (std::size_t i = 0; i < flags.size(); ++i) CHECK(flags[i] == !tainted(i));
  }
}

TEST_CASE("proof json: round trip preserves the check result") {
  auto proofs = bundled_proofs();
  for (const auto& [name, p] : proofs) {
    CAPTURE(name);
    std::string j1 = proof_to_json(p);
    Proof back = proof_from_json(j1);
    CHECK(proof_to_json(back) == j1);
    CHECK(check_proof(back).str() == check_proof(p).str());
  }
}

TEST_CASE("generated proofs check") {
  Rng rng(77);
  GenParams gp;
  for (int t = 0; t < 50; ++t) {
    GeneratedProof g = gen_proof(rng, gp, t % 2 == 0);
    CheckResult r = check_proof(g.proof);
    CAPTURE(t, r.str());
    CHECK(r.ok());
  }
}
