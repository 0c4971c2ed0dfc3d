#include "doctest.h"
#include "ptel/gen.hpp"
#include "ptel/knested.hpp"
#include "ptel/rank.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

namespace {
const AgentSignature kSig({"a1", "a2"});
}

TEST_CASE("ordinal rank: base cases") {
  Formula p = Formula::atom("p");
  CHECK(rank(p) == OrdinalRank{0, 0});
  CHECK(rank(Formula::common(p)) == OrdinalRank{1, 0});
  CHECK(rank(Formula::nnot(p)) == OrdinalRank{0, 1});
  CHECK(rank(Formula::common(Formula::common(p))) == OrdinalRank{2, 0});
  CHECK(OrdinalRank{1, 0}.str() == "w*1");
  CHECK(OrdinalRank{0, 3}.str() == "3");
  CHECK(OrdinalRank{2, 5}.str() == "w*2+5");
}

TEST_CASE("ordinal addition: associative, right-monotone") {
  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    OrdinalRank a{rng.below(4), rng.below(6)};
    OrdinalRank b{rng.below(4), rng.below(6)};
    OrdinalRank c{rng.below(4), rng.below(6)};
    CHECK((a + b) + c == a + (b + c));
    if (b < c) CHECK(a + b < a + c);  // strict monotonicity in the right argument
  }
}

TEST_CASE("rank: strictly decreases to proper subformulas") {
  GenParams gp;
  gp.max_depth = 5;
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    Formula f = expand(gen_formula(rng, gp, kSig, {"p", "q"}), kSig);
    OrdinalRank rf = rank(f);
    for (const Formula& sub : subformulas(f))
      if (!(sub == f)) CHECK(rank(sub) < rf);
  }
}

TEST_CASE("rank: expanded E^i stays below C") {
  GenParams gp;
  gp.max_depth = 3;
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    Formula g = gen_formula(rng, gp, kSig, {"p", "q"});
    OrdinalRank rc = rank(expand(Formula::common(g), kSig));
    for (int i = 0; i <= 10; ++i) {
      Formula ei = expand(Formula::everyone_n(g, i), kSig);
      CHECK(rank(ei) < rc);
    }
  }
  // the concrete example: rank(E^5 p) < rank(C p) = omega
  Formula p = Formula::atom("p");
  CHECK(rank(expand(Formula::everyone_n(p, 5), kSig)).omega_coeff == 0);
  CHECK(rank(expand(Formula::everyone_n(p, 5), kSig)) < rank(Formula::common(p)));
}

TEST_CASE("k-nested: base and small cases") {
  Formula core = Formula::atom("core");
  NestedContext k0;
  k0.B = {Formula::atom("b0")};
  CHECK(build_k_nested(k0, core) == Formula::implies(Formula::atom("b0"), core));

  NestedContext k1;
  k1.B = {Formula::tt(), Formula::tt()};
  k1.X = {NestedOp::next()};
  CHECK(build_k_nested(k1, core) ==
        Formula::implies(Formula::tt(),
                         Formula::next(Formula::implies(Formula::tt(), core))));
}

TEST_CASE("k-nested: match is the exact inverse") {
  GenParams gp;
  gp.max_depth = 2;
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    NestedContext ctx;
    std::size_t k = rng.below(5);
    for (std::size_t j = 0; j <= k; ++j)
      ctx.B.push_back(gen_formula(rng, gp, kSig, {"p", "q"}, static_cast<int>(rng.below(2))));
    for (std::size_t j = 0; j < k; ++j) {
      switch (rng.below(3)) {
        case 0: ctx.X.push_back(NestedOp::next()); break;
        case 1: ctx.X.push_back(NestedOp::wprev()); break;
        default: ctx.X.push_back(NestedOp::know(kSig.agents()[rng.below(2)])); break;
      }
    }
    Formula core = gen_formula(rng, gp, kSig, {"p", "q"});
    Formula built = build_k_nested(ctx, core);
    auto back = match_k_nested(built, ctx);
    REQUIRE(back.has_value());
    CHECK(*back == core);
  }
}

TEST_CASE("k-nested: mismatches yield nothing") {
  NestedContext ctx;
  ctx.B = {Formula::atom("b0"), Formula::atom("b1")};
  ctx.X = {NestedOp::next()};
  CHECK_FALSE(match_k_nested(Formula::atom("p"), ctx).has_value());
  // wrong operator in the spine
  Formula wrong = Formula::implies(
      Formula::atom("b1"),
      Formula::wprev(Formula::implies(Formula::atom("b0"), Formula::atom("c"))));
  CHECK_FALSE(match_k_nested(wrong, ctx).has_value());
  // wrong antecedent
  Formula wrong2 = Formula::implies(
      Formula::atom("zz"),
      Formula::next(Formula::implies(Formula::atom("b0"), Formula::atom("c"))));
  CHECK_FALSE(match_k_nested(wrong2, ctx).has_value());
}
