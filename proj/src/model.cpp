#include "ptel/model.hpp"

#include <algorithm>
#include <sstream>

namespace ptel {

void Model::reindex() {
  offsets_.assign(runs.size(), 0);
  std::uint32_t off = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    offsets_[i] = off;
    off += static_cast<std::uint32_t>(runs[i].period_worlds());
  }
  total_worlds_ = off;
}

WorldId Model::world_at(std::uint32_t idx) const {
  std::uint32_t run = 0;
  while (run + 1 < offsets_.size() && offsets_[run + 1] <= idx) ++run;
  return {run, idx - offsets_[run]};
}

bool Model::lifted_access(std::size_t agent_idx, std::uint32_t r1, std::uint64_t n1,
                          std::uint32_t r2, std::uint64_t n2) const {
  std::uint32_t from = world_index(canon(r1, n1));
  std::uint32_t to = world_index(canon(r2, n2));
  const auto& succ = access[agent_idx][from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

namespace {

std::string world_str(const Model& m, std::uint32_t idx) {
  WorldId w = m.world_at(idx);
  std::ostringstream os;
  os << "(" << w.run << "," << w.pos << ")";
  return os.str();
}

}  // namespace

std::vector<Violation> Model::validate() const {
  std::vector<Violation> out;
  auto bad = [&](const std::string& code, const std::string& detail) {
    out.push_back({code, detail});
  };

  if (runs.empty()) {
    bad("runs.empty", "model has no runs");
    return out;
  }
  std::set<std::string> universe(atoms.begin(), atoms.end());
  for (const std::string& a : sig.agents()) universe.insert(activity_atom(a));
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].loop.empty()) bad("run.loop_empty", "run " + std::to_string(i));
    auto check_val = [&](const std::set<std::string>& val, const std::string& where) {
      for (const std::string& at : val)
        if (!universe.count(at)) bad("atom.unknown", at + " in " + where);
    };
    for (std::size_t n = 0; n < runs[i].stem.size(); ++n)
      check_val(runs[i].stem[n], "run " + std::to_string(i) + " stem " + std::to_string(n));
    for (std::size_t n = 0; n < runs[i].loop.size(); ++n)
      check_val(runs[i].loop[n], "run " + std::to_string(i) + " loop " + std::to_string(n));
  }
  if (access.size() != sig.size()) {
    bad("access.shape", "agent count mismatch");
    return out;
  }
  const std::size_t W = world_count();
  for (std::size_t a = 0; a < sig.size(); ++a) {
    const std::string& ag = sig.agents()[a];
    if (access[a].size() != W) {
      bad("access.shape", "world count mismatch for agent " + ag);
      continue;
    }
    for (std::uint32_t w = 0; w < W; ++w) {
      bool src_active = active(ag, world_at(w));
      const auto& succ = access[a][w];
      if (!src_active && !succ.empty())
        bad("access.source_inactive", ag + " at " + world_str(*this, w));
      if (src_active && !std::binary_search(succ.begin(), succ.end(), w))
        bad("access.missing_self_loop", ag + " at " + world_str(*this, w));
      for (std::uint32_t t : succ) {
        if (t >= W) {
          bad("access.bad_world", ag + " successor out of range");
          continue;
        }
        if (!active(ag, world_at(t)))
          bad("access.target_inactive",
              ag + " " + world_str(*this, w) + " -> " + world_str(*this, t));
        if (!std::binary_search(access[a][t].begin(), access[a][t].end(), w))
          bad("access.asymmetric",
              ag + " " + world_str(*this, w) + " -> " + world_str(*this, t));
        for (std::uint32_t u : access[a][t])
          if (u < W && !std::binary_search(succ.begin(), succ.end(), u))
            bad("access.intransitive", ag + " " + world_str(*this, w) + " -> " +
                                           world_str(*this, t) + " -> " + world_str(*this, u));
      }
    }
  }
  if (run_measure.size() != W) {
    bad("measure.missing", "run measure not defined at every canonical world");
  } else {
    for (std::uint32_t w = 0; w < W; ++w) {
      if (run_measure[w].size() != runs.size()) {
        bad("measure.shape", "weights at " + world_str(*this, w));
        continue;
      }
      Rat sum(0);
      for (const Rat& x : run_measure[w]) {
        if (x < Rat(0)) bad("measure.negative_weight", world_str(*this, w));
        sum += x;
      }
      if (sum != Rat(1)) bad("measure.not_normalized", world_str(*this, w) + " sums to " + rat_string(sum));
    }
  }
  if (agent_space.size() != W) {
    bad("space.missing", "agent spaces not defined at every canonical world");
  } else {
    for (std::uint32_t w = 0; w < W; ++w) {
      if (agent_space[w].size() != sig.size()) {
        bad("space.shape", world_str(*this, w));
        continue;
      }
      for (std::size_t a = 0; a < sig.size(); ++a) {
        const auto& samples = agent_space[w][a];
        if (samples.empty()) {
          bad("space.empty", sig.agents()[a] + " at " + world_str(*this, w));
          continue;
        }
        Rat sum(0);
        for (const Sample& s : samples) {
          if (s.run >= runs.size()) bad("space.bad_world", world_str(*this, w));
          if (s.weight < Rat(0)) bad("space.negative_weight", world_str(*this, w));
          sum += s.weight;
        }
        if (sum != Rat(1))
          bad("space.not_normalized",
              sig.agents()[a] + " at " + world_str(*this, w) + " sums to " + rat_string(sum));
      }
    }
  }
  return out;
}

}  // namespace ptel
