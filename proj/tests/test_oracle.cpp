#include "doctest.h"
#include "ptel/fixtures.hpp"
#include "ptel/gen.hpp"
#include "ptel/oracle.hpp"
#include "ptel/semantics.hpp"
#include "ptel/syntax.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

TEST_CASE("oracle: conclusive answers on simple temporal shapes") {
  // all-p model: G p is definitely true, F q definitely false
  Model m = tiny_model({{"p"}, {"p"}}, {{"p"}, {"p"}});
  std::uint64_t horizon = m.runs[0].stem_len() + 2 * m.runs[0].loop_len();
  CHECK(brute_force_holds(m, 0, 0, parse("G p", m.sig), horizon) == TriBool::True);
  CHECK(brute_force_holds(m, 0, 0, parse("F q", m.sig), horizon) == TriBool::False);
  CHECK(brute_force_holds(m, 0, 0, parse("p U q", m.sig), horizon) == TriBool::False);
  // an until with a visible witness
  Model m2 = tiny_model({{"p"}, {"p"}, {"p"}, {"q"}}, {{}});
  CHECK(brute_force_holds(m2, 0, 0, parse("p U q", m2.sig), 10) == TriBool::True);
  CHECK(brute_force_holds(m2, 0, 0, parse("q", m2.sig), 10) == TriBool::False);
}

TEST_CASE("oracle: unknown only where exhaustion is inconclusive") {
  // the witness side is a conjunction, not a literal, so a fruitless scan
  // cannot rule a witness out
  Model m = tiny_model({}, {{"p"}});
  TriBool r = brute_force_holds(m, 0, 0, parse("p U (q & q)", m.sig), 6);
  CHECK(r == TriBool::Unknown);
  // with a literal witness side the same search concludes
  CHECK(brute_force_holds(m, 0, 0, parse("p U q", m.sig), 6) == TriBool::False);
}

TEST_CASE("oracle: since is decided exactly") {
  Model m = tiny_model({{"q"}, {"p"}, {}}, {{"p"}});
  Evaluator ev(m);
  Formula f = parse("p S q", m.sig);
  for (std::uint64_t n = 0; n <= 6; ++n) {
    TriBool o = brute_force_holds(m, 0, n, f, 12);
    REQUIRE(o != TriBool::Unknown);
    CHECK((o == TriBool::True) == ev.holds(0, n, f));
  }
}

TEST_CASE("oracle agrees with the evaluator on definite answers") {
  int definite = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenParams gp;
    gp.seed = seed + 2000;
    Model m = gen_model(gp);
    Evaluator ev(m);
    Rng rng(seed * 97 + 1);
    GenParams fp;
    fp.max_depth = 4;
    for (int t = 0; t < 5; ++t) {
      Formula f = gen_formula(rng, fp, m.sig, gen_atoms(gp));
      std::uint32_t run = static_cast<std::uint32_t>(rng.below(m.runs.size()));
      std::uint64_t horizon = m.runs[run].stem_len() + 4 * m.runs[run].loop_len() + 4;
      std::uint64_t time = rng.below(m.runs[run].stem_len() + 2 * m.runs[run].loop_len() + 1);
      TriBool o = brute_force_holds(m, run, time, f, horizon);
      ++total;
      if (o != TriBool::Unknown) {
        ++definite;
        CAPTURE(seed, t, print(f), run, time);
        CHECK((o == TriBool::True) == ev.holds(run, time, f));
      }
    }
  }
  // the definite rate is measured strictly in the acceptance suite
  CHECK(definite * 10 >= total * 7);
}

TEST_CASE("oracle: epistemic and probabilistic clauses") {
  Witness w = make_witness("common", 2);
  CHECK(brute_force_holds(w.model, 0, 0, parse("E E p", w.model.sig), 8) == TriBool::True);
  CHECK(brute_force_holds(w.model, 0, 0, parse("C p", w.model.sig), 8) == TriBool::False);
  Witness pw = make_witness("prob", 3);
  CHECK(brute_force_holds(pw.model, 0, 0, parse("Pr<=1/3 p", pw.model.sig), 8) ==
        TriBool::True);
  CHECK(brute_force_holds(pw.model, 0, 0, parse("~Pr=0 p", pw.model.sig), 8) == TriBool::True);
}
