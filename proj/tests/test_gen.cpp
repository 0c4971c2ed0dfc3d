#include "doctest.h"
#include "ptel/gen.hpp"
#include "ptel/model_json.hpp"
#include "ptel/soundness.hpp"
#include "ptel/syntax.hpp"

using namespace ptel;

TEST_CASE("gen: determinism under a fixed seed") {
  GenParams p;
  p.seed = 123;
  CHECK(model_to_json(gen_model(p)) == model_to_json(gen_model(p)));
  Rng r1(9), r2(9);
  CHECK(print(gen_formula(r1, p, gen_signature(p), gen_atoms(p))) ==
        print(gen_formula(r2, p, gen_signature(p), gen_atoms(p))));
}

TEST_CASE("gen: 500 seeds produce validate-clean models") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenParams p;
    p.seed = seed;
    p.agent_count = 1 + static_cast<int>(seed % 4);
    p.atom_count = 1 + static_cast<int>(seed % 6);
    p.max_stem = static_cast<int>(seed % 3);
    p.max_loop = 1 + static_cast<int>(seed % 3);
    p.edge_density_pct = static_cast<int>(seed % 101);
    Model m = gen_model(p);
    auto violations = m.validate();
    CAPTURE(seed, violations.empty() ? "" : violations[0].code);
    CHECK(violations.empty());
  }
}

TEST_CASE("gen: zero edge density leaves only self loops") {
  GenParams p;
  p.seed = 3;
  p.edge_density_pct = 0;
  Model m = gen_model(p);
  for (std::size_t a = 0; a < m.sig.size(); ++a)
    for (std::uint32_t w = 0; w < m.world_count(); ++w)
      for (std::uint32_t t : m.access[a][w]) CHECK(t == w);
}

TEST_CASE("gen: formula depth and thresholds respect the parameters") {
  GenParams p;
  p.max_depth = 0;
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Formula f = gen_formula(rng, p, gen_signature(p), gen_atoms(p));
    CHECK(f.depth() == 0);
  }
  GenParams q;
  q.max_denominator = 4;
  Rng rng2(6);
  for (int i = 0; i < 200; ++i) {
    Rat t = gen_threshold(rng2, q);
    CHECK(in_unit_interval(t));
    CHECK(t.denominator() <= 4);
  }
}

TEST_CASE("soundness suite: clean run on a small budget") {
  SoundnessConfig cfg;
  cfg.models = 12;
  cfg.instances_per_model = 2;
  cfg.gen.seed = 2024;
  SoundnessReport rep = run_soundness(cfg);
  CAPTURE(rep.text());
  CHECK(rep.ok());
  CHECK(rep.trials.size() == kAxiomCount);
  for (const auto& [name, count] : rep.trials) CHECK(count == 24);
  CHECK(rep.rule_checks > 0);
}

TEST_CASE("soundness suite: mutation hook is detected and shrunk") {
  for (Mutation mut : {Mutation::AKRUnguarded, Mutation::AGP2Flipped, Mutation::AXZReversed}) {
    SoundnessConfig cfg;
    cfg.models = 12;
    cfg.instances_per_model = 3;
    cfg.gen.seed = 99;
    cfg.mutate = mut;
    SoundnessReport rep = run_soundness(cfg);
    REQUIRE_FALSE(rep.ok());
    // the shrunk countermodel still witnesses the violation
    const SoundnessViolation& v = rep.violations.front();
    Model m = model_from_json(v.model_json);
    REQUIRE(m.validate().empty());
    // report carries the failing world
    CHECK(v.run < m.runs.size());
  }
}
