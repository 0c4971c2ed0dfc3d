// Shared test helpers: a pointwise reference for the ultimately periodic
// set algebra, and small hand-built models.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ptel/model.hpp"
#include "ptel/upset.hpp"

namespace ptel::test {

using Bits = std::function<bool(std::uint64_t)>;

inline Bits from_vectors(std::vector<bool> stem, std::vector<bool> loop) {
  return [stem = std::move(stem), loop = std::move(loop)](std::uint64_t n) {
    if (n < stem.size()) return stem[n];
    return loop[(n - stem.size()) % loop.size()];
  };
}

// Reference semantics computed straight from the quantifier definitions.
// For periodic inputs with stem s and loop L a fruitless witness search up
// to s + 2L is conclusive, so these are exact.
inline bool ref_until(const Bits& a, const Bits& b, std::uint64_t n, std::uint64_t s,
                      std::uint64_t L) {
  std::uint64_t limit = std::max(n, s) + 2 * L + 1;
  for (std::uint64_t j = n; j <= limit; ++j) {
    if (b(j)) return true;
    if (!a(j)) return false;
  }
  return false;  // a holds forever, b never: no witness
}

inline bool ref_since(const Bits& a, const Bits& b, std::uint64_t n) {
  for (std::uint64_t j = n;; --j) {
    if (b(j)) return true;
    if (!a(j)) return false;
    if (j == 0) return false;
  }
}

inline bool agree_up_to(const UPSet& got, const Bits& want, std::uint64_t horizon) {
  for (std::uint64_t n = 0; n <= horizon; ++n)
    if (got.member(n) != want(n)) return false;
  return true;
}

// One run, one agent; relations, measure and spaces all trivial.
inline Model tiny_model(std::vector<std::set<std::string>> stem,
                        std::vector<std::set<std::string>> loop,
                        std::vector<std::string> atoms = {"p", "q"}) {
  Model m;
  m.sig = AgentSignature({"a1"});
  m.atoms = std::move(atoms);
  Run r;
  r.stem = std::move(stem);
  r.loop = std::move(loop);
  m.runs.push_back(std::move(r));
  m.reindex();
  const std::uint32_t W = static_cast<std::uint32_t>(m.world_count());
  m.access.assign(1, std::vector<std::vector<std::uint32_t>>(W));
  for (std::uint32_t w = 0; w < W; ++w)
    if (m.active("a1", m.world_at(w))) m.access[0][w].push_back(w);
  m.run_measure.assign(W, {Rat(1)});
  m.agent_space.assign(W, {{Sample{0, 0, Rat(1)}}});
  return m;
}

}  // namespace ptel::test
