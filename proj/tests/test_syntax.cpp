#include "doctest.h"
#include "ptel/gen.hpp"
#include "ptel/knested.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

namespace {
const AgentSignature kSig({"a1", "a2"});
const AgentSignature kSig4({"a1", "a2", "a3", "a4"});
}  // namespace

TEST_CASE("parse: single operators") {
  CHECK(parse("X p", kSig) == Formula::next(Formula::atom("p")));
  CHECK(parse("Z p", kSig) == Formula::wprev(Formula::atom("p")));
  CHECK(parse("~p", kSig) == Formula::nnot(Formula::atom("p")));
  CHECK(parse("K[a1] p", kSig) == Formula::know("a1", Formula::atom("p")));
  CHECK(parse("active(a2)", kSig) == Formula::active("a2"));
  CHECK(parse("true", kSig) == Formula::tt());
}

TEST_CASE("parse: probability thresholds") {
  Formula f = parse("Pr>=1/2 (p & ~q)", kSig);
  Formula want = Formula::prob(
      Cmp::Ge, Rat(1, BigInt(2)),
      Formula::aand(Formula::atom("p"), Formula::nnot(Formula::atom("q"))));
  CHECK(f == want);
  CHECK(parse("Pr[a1]>=1/3 p", kSig) ==
        Formula::proba("a1", Cmp::Ge, Rat(1, BigInt(3)), Formula::atom("p")));
  CHECK(parse("Pr=2/4 p", kSig).bound() == Rat(1, BigInt(2)));  // normalized
  CHECK(parse("Pr<1 p", kSig).cmp() == Cmp::Lt);
}

TEST_CASE("parse: associativity and precedence") {
  // -> is right-associative and loosest
  CHECK(parse("p -> q -> r", kSig) ==
        Formula::implies(Formula::atom("p"),
                         Formula::implies(Formula::atom("q"), Formula::atom("r"))));
  // & binds tighter than |, unary tighter than &
  CHECK(parse("X p & q", kSig) ==
        Formula::aand(Formula::next(Formula::atom("p")), Formula::atom("q")));
  CHECK(parse("p | q & r", kSig) ==
        Formula::oor(Formula::atom("p"),
                     Formula::aand(Formula::atom("q"), Formula::atom("r"))));
  // U is right-associative
  CHECK(parse("p U q U r", kSig) ==
        Formula::until(Formula::atom("p"),
                       Formula::until(Formula::atom("q"), Formula::atom("r"))));
}

TEST_CASE("parse: the k=4 nested implication display") {
  NestedContext ctx;
  for (int i = 0; i <= 4; ++i) ctx.B.push_back(Formula::atom("b" + std::to_string(i)));
  ctx.X = {NestedOp::wprev(), NestedOp::know("a1"), NestedOp::next(), NestedOp::know("a3")};
  Formula built = build_k_nested(ctx, Formula::atom("al"));
  Formula parsed =
      parse("b4 -> K[a3] (b3 -> X (b2 -> K[a1] (b1 -> Z (b0 -> al))))", kSig4);
  CHECK(built == parsed);
  CHECK(print(built) == "b4 -> K[a3] (b3 -> X (b2 -> K[a1] (b1 -> Z (b0 -> al))))");
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse("p &", kSig), ParseError);
  CHECK_THROWS_AS(parse("K[zz] p", kSig), ParseError);
  CHECK_THROWS_AS(parse("Pr>=3/2 p", kSig), ParseError);
  CHECK_THROWS_AS(parse("p q", kSig), ParseError);
  CHECK_THROWS_AS(parse("", kSig), ParseError);
  try {
    parse("p & & q", kSig);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("print: examples") {
  CHECK(print(Formula::next(Formula::atom("p"))) == "X p");
  CHECK(print(Formula::proba("a1", Cmp::Ge, Rat(1, BigInt(3)), Formula::atom("p"))) ==
        "Pr[a1]>=1/3 p");
  Formula f = Formula::aand(Formula::atom("p"), Formula::nnot(Formula::atom("q")));
  CHECK(parse(print(f), kSig) == f);
}

TEST_CASE("parse/print round trip on random formulas") {
  GenParams p;
  p.max_depth = 5;
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen_formula(rng, p, kSig, {"p", "q", "r"});
    CAPTURE(print(f));
    CHECK(parse(print(f), kSig) == f);
  }
}

TEST_CASE("expand: temporal abbreviations") {
  Formula p = Formula::atom("p");
  Formula taut = Formula::nnot(Formula::aand(p, Formula::nnot(p)));
  CHECK(expand(Formula::sometime(p), kSig) == Formula::until(taut, p));
  CHECK(expand(Formula::once(p), kSig) == Formula::since(taut, p));
  Formula np = Formula::nnot(p);
  Formula ntaut = Formula::nnot(Formula::aand(np, Formula::nnot(np)));
  CHECK(expand(Formula::always(p), kSig) == Formula::nnot(Formula::until(ntaut, np)));
}

TEST_CASE("expand: everyone is the signature-ordered conjunction") {
  Formula p = Formula::atom("p");
  CHECK(expand(Formula::everyone(p), kSig) ==
        Formula::aand(Formula::know("a1", p), Formula::know("a2", p)));
  AgentSignature one({"a1"});
  CHECK(expand(Formula::everyone(p), one) == Formula::know("a1", p));
  CHECK(expand(Formula::everyone(p), kSig4).arity() == 2);  // right-nested
}

TEST_CASE("expand: probability comparisons") {
  Formula p = Formula::atom("p");
  CHECK(expand(Formula::prob(Cmp::Le, Rat(2, BigInt(3)), p), kSig) ==
        Formula::prob(Cmp::Ge, Rat(1, BigInt(3)), Formula::nnot(p)));
  CHECK(expand(Formula::prob(Cmp::Lt, Rat(1, BigInt(2)), p), kSig) ==
        Formula::nnot(Formula::prob(Cmp::Ge, Rat(1, BigInt(2)), p)));
  CHECK(expand(Formula::prob(Cmp::Gt, Rat(1, BigInt(2)), p), kSig) ==
        Formula::nnot(Formula::prob(Cmp::Ge, Rat(1, BigInt(2)), Formula::nnot(p))));
  CHECK(expand(Formula::prob(Cmp::Eq, Rat(1, BigInt(4)), p), kSig) ==
        Formula::aand(Formula::prob(Cmp::Ge, Rat(1, BigInt(4)), p),
                      Formula::prob(Cmp::Ge, Rat(3, BigInt(4)), Formula::nnot(p))));
  CHECK(expand(Formula::proba("a2", Cmp::Le, Rat(2, BigInt(3)), p), kSig) ==
        Formula::proba("a2", Cmp::Ge, Rat(1, BigInt(3)), Formula::nnot(p)));
}

TEST_CASE("expand: idempotent on core formulas") {
  GenParams p;
  p.max_depth = 5;
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen_formula(rng, p, kSig, {"p", "q"});
    Formula core = expand(f, kSig);
    CHECK(core.is_core());
    CHECK(expand(core, kSig) == core);
  }
}

TEST_CASE("subformulas: ordered, unique, children first") {
  Formula p = Formula::atom("p");
  CHECK(subformulas(p).size() == 1);
  Formula f = Formula::aand(p, Formula::nnot(p));
  auto subs = subformulas(f);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == p);
  CHECK(subs[1] == Formula::nnot(p));
  CHECK(subs[2] == f);
  // size is bounded by the node count
  GenParams gp;
  gp.max_depth = 5;
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Formula g = gen_formula(rng, gp, kSig, {"p", "q"});
    std::function<std::size_t(const Formula&)> count = [&](const Formula& h) {
      std::size_t c = 1;
      for (std::size_t k = 0; k < h.arity(); ++k) c += count(h.child(k));
      return c;
    };
    auto ss = subformulas(g);
    CHECK(ss.size() <= count(g));
    // children precede parents
    for (std::size_t a = 0; a < ss.size(); ++a)
      for (std::size_t k = 0; k < ss[a].arity(); ++k) {
        bool seen = false;
        for (std::size_t b = 0; b < a; ++b) seen = seen || ss[b] == ss[a].child(k);
        CHECK(seen);
      }
  }
}
