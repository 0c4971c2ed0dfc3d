#include <numeric>

#include "doctest.h"
#include "ptel/gen.hpp"
#include "ptel/model_json.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

TEST_CASE("canon folds loop positions") {
  Model m = tiny_model({{"p"}, {}}, {{"q"}, {}, {"p"}});  // p=2, l=3
  CHECK(m.canon(0, 1) == WorldId{0, 1});
  CHECK(m.canon(0, 7) == WorldId{0, 4});  // 2 + (7-2) mod 3
  CHECK(m.canon(0, 4) == WorldId{0, 4});
  // idempotent on canonical positions
  for (std::uint32_t pos = 0; pos < 5; ++pos) CHECK(m.canon(0, pos) == WorldId{0, pos});
  Model constant = tiny_model({}, {{}});
  for (std::uint64_t n : {0, 1, 5, 100}) CHECK(constant.canon(0, n) == WorldId{0, 0});
}

TEST_CASE("instances descriptor") {
  Model m = tiny_model({{"p"}, {}}, {{"q"}, {}, {"p"}});
  auto i1 = m.instances({0, 1});
  REQUIRE(std::holds_alternative<SingleTime>(i1));
  CHECK(std::get<SingleTime>(i1).time == 1);
  auto i3 = m.instances({0, 3});
  REQUIRE(std::holds_alternative<Progression>(i3));
  CHECK(std::get<Progression>(i3).first == 3);
  CHECK(std::get<Progression>(i3).step == 3);
  Model constant = tiny_model({}, {{}});
  auto i0 = constant.instances({0, 0});
  REQUIRE(std::holds_alternative<Progression>(i0));
  CHECK(std::get<Progression>(i0).first == 0);
  CHECK(std::get<Progression>(i0).step == 1);
}

TEST_CASE("validate: clean single-run model") {
  Model m = tiny_model({{"p"}}, {{}});
  CHECK(m.validate().empty());
}

TEST_CASE("validate: flags broken structure") {
  SUBCASE("relation target lacks the activity atom") {
    Model m = tiny_model({{activity_atom("a1")}}, {{}});
    // world 0 active, world 1 inactive; add 0 -> 1 (and back, to keep symmetry)
    m.access[0][0].push_back(1);
    m.access[0][1].push_back(0);
    std::sort(m.access[0][0].begin(), m.access[0][0].end());
    auto violations = m.validate();
    bool target_inactive = false, source_inactive = false;
    for (const auto& v : violations) {
      target_inactive = target_inactive || v.code == "access.target_inactive";
      source_inactive = source_inactive || v.code == "access.source_inactive";
    }
    CHECK(target_inactive);
    CHECK(source_inactive);
  }
  SUBCASE("weights not normalized") {
    Model m = tiny_model({}, {{}});
    m.run_measure[0] = {Rat(9, BigInt(10))};
    bool found = false;
    for (const auto& v : m.validate()) found = found || v.code == "measure.not_normalized";
    CHECK(found);
  }
  SUBCASE("missing self loop at an active world") {
    Model m = tiny_model({}, {{activity_atom("a1")}});
    m.access[0][0].clear();
    bool found = false;
    for (const auto& v : m.validate()) found = found || v.code == "access.missing_self_loop";
    CHECK(found);
  }
  SUBCASE("asymmetric relation") {
    Model m = tiny_model({}, {{activity_atom("a1")}, {activity_atom("a1")}});
    m.access[0][0] = {0, 1};
    m.access[0][1] = {1};
    bool found = false;
    for (const auto& v : m.validate()) found = found || v.code == "access.asymmetric";
    CHECK(found);
  }
  SUBCASE("empty sample set") {
    Model m = tiny_model({}, {{}});
    m.agent_space[0][0].clear();
    bool found = false;
    for (const auto& v : m.validate()) found = found || v.code == "space.empty";
    CHECK(found);
  }
}

TEST_CASE("lifted access") {
  GenParams p;
  p.seed = 5;
  Model m = gen_model(p);
  REQUIRE(m.validate().empty());
  SUBCASE("inactive source reaches nothing, active worlds reach themselves") {
    for (std::uint32_t w = 0; w < m.world_count(); ++w) {
      WorldId id = m.world_at(w);
      for (std::size_t a = 0; a < m.sig.size(); ++a) {
        bool self = m.lifted_access(a, id.run, id.pos, id.run, id.pos);
        CHECK(self == m.active(m.sig.agents()[a], id));
      }
    }
  }
  SUBCASE("time shifted by the loop has identical access") {
    for (std::uint32_t r = 0; r < m.runs.size(); ++r) {
      std::uint64_t p0 = m.runs[r].stem_len(), l = m.runs[r].loop_len();
      for (std::uint32_t r2 = 0; r2 < m.runs.size(); ++r2)
        for (std::uint64_t n2 = 0; n2 < m.runs[r2].period_worlds(); ++n2)
          for (std::size_t a = 0; a < m.sig.size(); ++a)
            CHECK(m.lifted_access(a, r, p0, r2, n2) == m.lifted_access(a, r, p0 + l, r2, n2));
    }
  }
  SUBCASE("symmetry and transitivity on concrete worlds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GenParams gp;
      gp.seed = seed;
      Model mm = gen_model(gp);
      Rng rng(seed ^ 0x777);
      for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t r1 = static_cast<std::uint32_t>(rng.below(mm.runs.size()));
        std::uint32_t r2 = static_cast<std::uint32_t>(rng.below(mm.runs.size()));
        std::uint32_t r3 = static_cast<std::uint32_t>(rng.below(mm.runs.size()));
        auto time_in = [&](std::uint32_t rr) {
          return rng.below(mm.runs[rr].stem_len() + 3 * mm.runs[rr].loop_len());
        };
        std::uint64_t n1 = time_in(r1), n2 = time_in(r2), n3 = time_in(r3);
        std::size_t a = rng.below(mm.sig.size());
        CHECK(mm.lifted_access(a, r1, n1, r2, n2) == mm.lifted_access(a, r2, n2, r1, n1));
        if (mm.lifted_access(a, r1, n1, r2, n2) && mm.lifted_access(a, r2, n2, r3, n3))
          CHECK(mm.lifted_access(a, r1, n1, r3, n3));
      }
    }
  }
}

TEST_CASE("model json: round trip") {
  GenParams p;
  p.seed = 42;
  Model m = gen_model(p);
  std::string j1 = model_to_json(m);
  Model back = model_from_json(j1);
  CHECK(back.validate().empty());
  CHECK(model_to_json(back) == j1);
}

TEST_CASE("model json: defaults fill unlisted worlds") {
  std::string text = R"({
    "agents": ["a1"],
    "atoms": ["p"],
    "runs": [{"stem": [["p"]], "loop": [["p", "active(a1)"], []]}],
    "access": {"a1": [[[0,1],[0,1]]]},
    "run_measure": {"default": {"0": "1"}},
    "agent_spaces": {"0,0,a1": [{"world":[0,3], "w":"1"}],
                     "default_a1": [{"world":[0,0], "w":"1/2"}, {"world":[0,1], "w":"1/2"}]}
  })";
  Model m = model_from_json(text);
  CHECK(m.validate().empty());
  CHECK(m.run_measure[2][0] == Rat(1));
  CHECK(m.agent_space[0][0].size() == 1);
  CHECK(m.agent_space[0][0][0].time == 3);
  CHECK(m.agent_space[1][0].size() == 2);
}

TEST_CASE("model json: malformed input is reported") {
  CHECK_THROWS_AS(model_from_json("{"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"agents": [], "runs": []})"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"agents": ["a1"], "runs": []})"), ModelFormatError);
  CHECK_THROWS_AS(
      model_from_json(
          R"({"agents":["a1"],"runs":[{"loop":[[]]}],"run_measure":{},"agent_spaces":{"default":[{"world":[0,0],"w":"1"}]}})"),
      ModelFormatError);  // no measure and no default
}
