#include "doctest.h"
#include "ptel/axioms.hpp"
#include "ptel/gen.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

namespace {
const AgentSignature kSig({"a1", "a2"});

bool matches(const Formula& surface, AxiomId want) {
  for (const AxiomMatch& m : match_axiom(expand(surface, kSig), kSig))
    if (m.id == want) return true;
  return false;
}
}  // namespace

TEST_CASE("match: hand-picked instances") {
  CHECK(matches(parse("~X p <-> X ~p", kSig), AxiomId::AXNot));
  CHECK(matches(parse("p -> (q -> p)", kSig), AxiomId::Prop));
  CHECK(matches(parse("Pr>=0 (p U q)", kSig), AxiomId::AGP1));
  CHECK(matches(parse("p U q <-> q | (p & X (p U q))", kSig), AxiomId::AUX));
  CHECK(matches(parse("p U q -> F q", kSig), AxiomId::AUF));
  CHECK(matches(parse("~Z ~p -> Z p", kSig), AxiomId::AZNot));
  CHECK(matches(parse("X Z p <-> p", kSig), AxiomId::AXZ));
  CHECK(matches(parse("X Z p -> Z X p", kSig), AxiomId::AXZC1));
  CHECK(matches(parse("~Z (q & ~q) -> (X Z p <-> Z X p)", kSig), AxiomId::AXZC2));
  CHECK(matches(parse("O Z q", kSig), AxiomId::AOZ));
  CHECK(matches(parse("active(a1) -> (K[a1] p -> p)", kSig), AxiomId::AKR));
  CHECK(matches(parse("active(a2) -> K[a2] active(a2)", kSig), AxiomId::AKA));
  CHECK(matches(parse("~active(a1) -> K[a1] (p & ~p)", kSig), AxiomId::AKDE));
  CHECK(matches(parse("K[a1] ~p -> K[a1] ~K[a1] p", kSig), AxiomId::AKS));
  CHECK(matches(parse("K[a1] p -> K[a1] K[a1] p", kSig), AxiomId::AKT));
  CHECK(matches(parse("C p -> E E p", kSig), AxiomId::ACE));
  CHECK(matches(parse("C p -> p", kSig), AxiomId::ACE));  // m = 0
  CHECK(matches(parse("Pr>=1 Z (p & ~p)", kSig), AxiomId::AGPZ));
  CHECK(matches(parse("Pr[a2]>=0 p", kSig), AxiomId::AP1));
}

TEST_CASE("match: the ACE exponent is recovered") {
  auto ms = match_axiom(expand(parse("C p -> E E E p", kSig), kSig), kSig);
  bool found = false;
  for (const auto& m : ms)
    if (m.id == AxiomId::ACE) {
      found = true;
      CHECK(m.m == 3);
    }
  CHECK(found);
}

TEST_CASE("match: threshold side conditions are exact") {
  // AGP2 requires t > r
  CHECK(matches(parse("Pr<=1/3 p -> Pr<1/2 p", kSig), AxiomId::AGP2));
  CHECK_FALSE(matches(parse("Pr<=1/2 p -> Pr<1/3 p", kSig), AxiomId::AGP2));
  CHECK_FALSE(matches(parse("Pr<=1/2 p -> Pr<1/2 p", kSig), AxiomId::AGP2));
  CHECK(matches(parse("Pr<1/2 p -> Pr<=1/2 p", kSig), AxiomId::AGP3));
  // AGP4 takes min(1, r+t)
  CHECK(matches(parse("(Pr>=2/3 p & Pr>=2/3 q & Pr>=1 ~(p & q)) -> Pr>=1 (p | q)", kSig),
                AxiomId::AGP4));
  CHECK(matches(parse("(Pr>=1/3 p & Pr>=1/3 q & Pr>=1 ~(p & q)) -> Pr>=2/3 (p | q)", kSig),
                AxiomId::AGP4));
  CHECK_FALSE(matches(parse("(Pr>=1/3 p & Pr>=1/3 q & Pr>=1 ~(p & q)) -> Pr>=1 (p | q)", kSig),
                      AxiomId::AGP4));
  // AGP5 requires r + t <= 1
  CHECK(matches(parse("(Pr<=1/2 p & Pr<1/2 q) -> Pr<1 (p | q)", kSig), AxiomId::AGP5));
  CHECK(matches(parse("(Pr[a1]<=1/2 p & Pr[a1]<1/3 q) -> Pr[a1]<5/6 (p | q)", kSig),
                AxiomId::AP5));
}

TEST_CASE("match: primed spellings reduce to the unprimed schema") {
  CHECK(matches(parse("Pr<=1 p", kSig), AxiomId::AGP1));       // AGP1'
  CHECK(matches(parse("Pr>=1/2 p -> Pr>1/3 p", kSig), AxiomId::AGP2));  // AGP2'
  CHECK(matches(parse("Pr>1/3 p -> Pr>=1/3 p", kSig), AxiomId::AGP3));  // AGP3'
  CHECK(matches(parse("Pr[a1]<=1 p", kSig), AxiomId::AP1));
  CHECK(matches(parse("Pr[a1]>=1/2 p -> Pr[a1]>1/3 p", kSig), AxiomId::AP2));
  CHECK(matches(parse("Pr[a1]>1/3 p -> Pr[a1]>=1/3 p", kSig), AxiomId::AP3));
}

TEST_CASE("match: agent indexes must be consistent") {
  CHECK_FALSE(matches(parse("active(a1) -> K[a2] active(a1)", kSig), AxiomId::AKA));
  CHECK_FALSE(matches(parse("K[a1] p -> K[a2] K[a1] p", kSig), AxiomId::AKT));
  CHECK_FALSE(
      matches(parse("Pr[a1]>=1/2 p -> Pr[a2]>1/3 p", kSig), AxiomId::AP2));
}

TEST_CASE("generated instances match their own schema") {
  GenParams p;
  Rng rng(101);
  std::vector<std::string> atoms = {"p", "q", "r"};
  for (AxiomId id : all_axiom_ids()) {
    for (int t = 0; t < 30; ++t) {
      Formula inst = gen_axiom_instance(id, rng, p, kSig, atoms);
      CAPTURE(axiom_name(id), print(inst));
      CHECK(matches(inst, id));
    }
  }
}

TEST_CASE("tautology decision") {
  CHECK(is_tautology(expand(parse("p | ~p", kSig), kSig)));
  CHECK(is_tautology(expand(parse("(p -> q) -> ((q -> r) -> (p -> r))", kSig), kSig)));
  CHECK_FALSE(is_tautology(expand(parse("p -> q", kSig), kSig)));
  // non-boolean leaves are opaque: X(p | ~p) is not a propositional tautology
  CHECK_FALSE(is_tautology(expand(parse("X (p | ~p)", kSig), kSig)));
  CHECK(is_tautology(expand(parse("X p | ~X p", kSig), kSig)));
}

TEST_CASE("tautology guard rejects oversized abstractions") {
  Formula f = Formula::atom("x0");
  for (int i = 1; i <= 21; ++i) f = Formula::aand(f, Formula::atom("x" + std::to_string(i)));
  f = Formula::nnot(Formula::aand(f, Formula::nnot(f)));  // f -> f with 22 variables
  CHECK_THROWS_AS(is_tautology(f), TautologyTooLarge);
}
