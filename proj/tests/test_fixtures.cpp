#include "doctest.h"
#include "ptel/fixtures.hpp"
#include "ptel/semantics.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

TEST_CASE("bundled proofs all check") {
  auto proofs = bundled_proofs();
  REQUIRE(proofs.size() == 8);
  for (const auto& [name, p] : proofs) {
    CheckResult r = check_proof(p);
    CAPTURE(name, r.str());
    CHECK(r.ok());
  }
}

TEST_CASE("bundled proofs cover every rule") {
  auto proofs = bundled_proofs();
  bool nec_seen[5] = {false, false, false, false, false};
  bool inf_seen[5] = {false, false, false, false, false};
  bool mp_seen = false, axiom_seen = false, hyp_seen = false;
  for (const auto& [name, p] : proofs)
    for (const ProofStep& s : p.steps) {
      switch (s.kind) {
        case StepKind::MP: mp_seen = true; break;
        case StepKind::Axiom: axiom_seen = true; break;
        case StepKind::Hyp: hyp_seen = true; break;
        case StepKind::Nec: nec_seen[static_cast<int>(s.nec)] = true; break;
        case StepKind::Inf: inf_seen[static_cast<int>(s.inf)] = true; break;
      }
    }
  CHECK(mp_seen);
  CHECK(axiom_seen);
  CHECK(hyp_seen);
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(nec_seen[i]);
    CHECK(inf_seen[i]);
  }
}

TEST_CASE("theorem fixtures conclude what they claim") {
  auto proofs = bundled_proofs();
  const AgentSignature sig({"a1", "a2"});
  auto concl = [&](const std::string& name) { return proofs.at(name).steps.back().formula; };
  CHECK(expand(concl("ru-theorem"), sig) ==
        expand(parse("~(p U (q & ~q))", sig), sig));
  CHECK(expand(concl("rs-theorem"), sig) ==
        expand(parse("~(p S (q & ~q))", sig), sig));
  CHECK(expand(concl("rga-theorem"), sig) ==
        expand(parse("Pr>=1 ~(p & ~p)", sig), sig));
  CHECK(expand(concl("ra-theorem"), sig) ==
        expand(parse("Pr[a1]>=1 ~(p & ~p)", sig), sig));
  CHECK(expand(concl("rc-theorem"), sig) ==
        expand(parse("true -> K[a1] (true -> C ~(p & ~p))", sig), sig));
}

TEST_CASE("theorem fixtures are hypothesis-free where expected") {
  auto proofs = bundled_proofs();
  for (const std::string name :
       {"agpz-chain", "nec-chain", "ru-theorem", "rs-theorem", "rc-theorem", "rga-theorem",
        "ra-theorem"}) {
    const Proof& p = proofs.at(name);
    CHECK(p.theory.empty());
    for (bool f : theorem_flags(p)) CHECK(f);
  }
}

TEST_CASE("rs premise templates regenerate to the rule shape") {
  auto proofs = bundled_proofs();
  const Proof& rs = proofs.at("rs-theorem");
  const ProofStep* inf = nullptr;
  for (const ProofStep& s : rs.steps)
    if (s.kind == StepKind::Inf) inf = &s;
  REQUIRE(inf != nullptr);
  REQUIRE(inf->inf == InfRule::RS);
  std::map<std::string, const ProofStep*> by_id;
  for (const ProofStep& s : rs.steps) by_id[s.id] = &s;
  for (const auto& [i, ref] : inf->premises) {
    Formula want = build_k_nested(inf->ctx, inf_premise_template(InfRule::RS, *inf, i));
    CHECK(expand(by_id.at(ref)->formula, rs.sig) == expand(want, rs.sig));
  }
}

TEST_CASE("witness families satisfy their finite subsets") {
  for (const std::string fam : {"next", "common", "prob"}) {
    for (int k : {0, 1, 3, 7}) {
      Witness w = make_witness(fam, k);
      CAPTURE(fam, k);
      REQUIRE(w.model.validate().empty());
      Evaluator ev(w.model);
      for (const Formula& f : w.formulas) {
        CAPTURE(print(f));
        CHECK(ev.holds(w.run, w.time, f));
      }
    }
  }
  CHECK_THROWS_AS(make_witness("bogus", 1), std::invalid_argument);
}
