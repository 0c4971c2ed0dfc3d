#include "doctest.h"
#include "ptel/gen.hpp"
#include "ptel/syntax.hpp"
#include "ptel/transforms.hpp"

using namespace ptel;

namespace {

const AgentSignature kSig({"a1", "a2"});

Formula last_formula(const Proof& p) { return p.steps.back().formula; }

bool expand_eq(const Formula& a, const Formula& b, const AgentSignature& sig) {
  return expand(a, sig) == expand(b, sig);
}

}  // namespace

TEST_CASE("deduction: modus ponens core case") {
  // from {a -> b, a} derive b; discharge a
  Proof p;
  p.sig = kSig;
  Formula a = parse("p", kSig), b = parse("q", kSig);
  Formula imp = Formula::implies(a, b);
  p.theory = {imp, a};
  ProofStep h1{.id = "h1", .kind = StepKind::Hyp, .formula = imp};
  ProofStep h2{.id = "h2", .kind = StepKind::Hyp, .formula = a};
  ProofStep m{.id = "m", .kind = StepKind::MP, .formula = b};
  m.from = {"h1", "h2"};
  p.steps = {h1, h2, m};
  REQUIRE(check_proof(p).ok());

  Proof out = deduction_transform(p, a);
  CHECK(check_proof(out).ok());
  CHECK(expand_eq(last_formula(out), Formula::implies(a, b), kSig));
  REQUIRE(out.theory.size() == 1);
  CHECK(out.theory[0] == imp);
}

TEST_CASE("deduction: identity") {
  Proof p;
  p.sig = kSig;
  Formula a = parse("p & q", kSig);
  p.theory = {a};
  ProofStep h{.id = "h", .kind = StepKind::Hyp, .formula = a};
  p.steps = {h};
  Proof out = deduction_transform(p, a);
  CHECK(check_proof(out).ok());
  CHECK(out.theory.empty());
  CHECK(expand_eq(last_formula(out), Formula::implies(a, a), kSig));
}

TEST_CASE("deduction: alpha must be designated") {
  Proof p = [] {
    Proof q;
    q.sig = kSig;
    Formula a = parse("p", kSig);
    q.theory = {a};
    ProofStep h{.id = "h", .kind = StepKind::Hyp, .formula = a};
    q.steps = {h};
    return q;
  }();
  CHECK_THROWS_AS(deduction_transform(p, parse("q", kSig)), std::invalid_argument);
}

TEST_CASE("strong necessitation: closed proofs just gain the operator") {
  Proof p;
  p.sig = kSig;
  ProofStep s{.id = "s", .kind = StepKind::Axiom, .formula = parse("p -> p", kSig)};
  s.axiom = AxiomId::Prop;
  p.steps = {s};
  for (NestedOp op : {NestedOp::next(), NestedOp::wprev(), NestedOp::know("a1")}) {
    Proof out = strong_necessitation_transform(p, op);
    CHECK(check_proof(out).ok());
    CHECK(out.theory.empty());
    Formula want = op.kind == NestedOp::Kind::Next    ? Formula::next(s.formula)
                   : op.kind == NestedOp::Kind::WeakPrev ? Formula::wprev(s.formula)
                                                         : Formula::know("a1", s.formula);
    CHECK(expand_eq(last_formula(out), want, kSig));
  }
}

TEST_CASE("strong necessitation: hypotheses map into the lifted theory") {
  Proof p;
  p.sig = kSig;
  Formula g = parse("p | q", kSig);
  p.theory = {g};
  ProofStep h{.id = "h", .kind = StepKind::Hyp, .formula = g};
  p.steps = {h};
  Proof out = strong_necessitation_transform(p, NestedOp::next());
  CHECK(check_proof(out).ok());
  REQUIRE(out.theory.size() == 1);
  CHECK(out.theory[0] == Formula::next(g));
  CHECK(expand_eq(last_formula(out), Formula::next(g), kSig));
}

TEST_CASE("transformers: generated proofs round-trip, including infinitary steps") {
  Rng rng(31337);
  GenParams gp;
  int with_inf_count = 0;
  for (int t = 0; t < 40; ++t) {
    bool with_inf = t % 3 == 0;
    GeneratedProof g = gen_proof(rng, gp, with_inf);
    REQUIRE(check_proof(g.proof).ok());
    Formula beta = last_formula(g.proof);

    Proof ded = deduction_transform(g.proof, g.alpha);
    CheckResult dr = check_proof(ded);
    CAPTURE(t, dr.str());
    CHECK(dr.ok());
    CHECK(expand_eq(last_formula(ded), Formula::implies(g.alpha, beta), g.proof.sig));
    if (with_inf) {
      CHECK(dr.status == CheckResult::Status::VerifiedBounded);
      ++with_inf_count;
    }

    NestedOp op = t % 3 == 0   ? NestedOp::next()
                  : t % 3 == 1 ? NestedOp::wprev()
                               : NestedOp::know(g.proof.sig.agents()[0]);
    Proof nec = strong_necessitation_transform(g.proof, op);
    CheckResult nr = check_proof(nec);
    CAPTURE(nr.str());
    CHECK(nr.ok());
    Formula want = op.kind == NestedOp::Kind::Next    ? Formula::next(beta)
                   : op.kind == NestedOp::Kind::WeakPrev ? Formula::wprev(beta)
                                                         : Formula::know(op.agent, beta);
    CHECK(expand_eq(last_formula(nec), want, g.proof.sig));
  }
  CHECK(with_inf_count >= 10);
}

TEST_CASE("transformers: theorem flags survive on closed proofs") {
  // a closed proof (no hypotheses): every transformed step stays a theorem
  Proof p;
  p.sig = kSig;
  ProofStep s{.id = "s", .kind = StepKind::Axiom, .formula = parse("p -> (q -> p)", kSig)};
  s.axiom = AxiomId::Prop;
  ProofStep n{.id = "n", .kind = StepKind::Nec, .formula = Formula::next(s.formula)};
  n.nec = NecRule::RXN;
  n.from = {"s"};
  p.steps = {s, n};
  REQUIRE(check_proof(p).ok());
  Proof out = strong_necessitation_transform(p, NestedOp::know("a2"));
  REQUIRE(check_proof(out).ok());
  for (bool f : theorem_flags(out)) CHECK(f);
}
