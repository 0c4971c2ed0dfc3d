#include "ptel/semantics.hpp"

#include <deque>
#include <stdexcept>

namespace ptel {

Evaluator::Evaluator(const Model& m) : m_(&m) {
  reach_.resize(m.world_count());
  reach_done_.assign(m.world_count(), false);
}

const std::vector<bool>& Evaluator::reachable_from(std::uint32_t w0) {
  if (reach_done_[w0]) return reach_[w0];
  std::vector<bool> seen(m_->world_count(), false);
  std::deque<std::uint32_t> queue;
  for (const auto& per_agent : m_->access)
    for (std::uint32_t t : per_agent[w0])
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
  while (!queue.empty()) {
    std::uint32_t w = queue.front();
    queue.pop_front();
    for (const auto& per_agent : m_->access)
      for (std::uint32_t t : per_agent[w])
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
  }
  reach_[w0] = std::move(seen);
  reach_done_[w0] = true;
  return reach_[w0];
}

UPSet Evaluator::canon_bits(std::uint32_t run, const std::vector<bool>& by_world) {
  const Run& r = m_->runs[run];
  std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
  for (std::uint32_t pos = 0; pos < r.period_worlds(); ++pos) {
    bool v = by_world[m_->world_index({run, pos})];
    if (pos < r.stem_len())
      stem[pos] = v;
    else
      loop[pos - r.stem_len()] = v;
  }
  return UPSet(std::move(stem), std::move(loop));
}

const UPSet& Evaluator::truth_set(std::uint32_t run, const Formula& core) {
  Key key{run, core};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  UPSet result = compute(run, core);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

UPSet Evaluator::compute(std::uint32_t run, const Formula& f) {
  if (!f.is_core()) throw std::invalid_argument("truth_set: formula must be core");
  switch (f.op()) {
    case Op::Atom: {
      const Run& r = m_->runs[run];
      std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
      for (std::size_t n = 0; n < r.stem_len(); ++n) stem[n] = r.stem[n].count(f.name()) > 0;
      for (std::size_t i = 0; i < r.loop_len(); ++i) loop[i] = r.loop[i].count(f.name()) > 0;
      return UPSet(std::move(stem), std::move(loop));
    }
    case Op::Not:
      return up_complement(truth_set(run, f.child()));
    case Op::And:
      return up_and(truth_set(run, f.child(0)), truth_set(run, f.child(1)));
    case Op::Next:
      return up_next(truth_set(run, f.child()));
    case Op::Until:
      return up_until(truth_set(run, f.child(0)), truth_set(run, f.child(1)));
    case Op::WeakPrev:
      return up_weak_prev(truth_set(run, f.child()));
    case Op::Since:
      return up_since(truth_set(run, f.child(0)), truth_set(run, f.child(1)));
    case Op::Know: {
      auto ai = m_->sig.index_of(f.agent());
      if (!ai) throw std::invalid_argument("unknown agent: " + f.agent());
      const Run& r = m_->runs[run];
      std::vector<bool> by_world(m_->world_count(), false);
      std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
      for (std::uint32_t pos = 0; pos < r.period_worlds(); ++pos) {
        WorldId w{run, pos};
        bool v = true;
        if (m_->active(f.agent(), w)) {
          for (std::uint32_t t : m_->access[*ai][m_->world_index(w)]) {
            if (!holds_at_all_instances(m_->world_at(t), f.child())) {
              v = false;
              break;
            }
          }
        }
        // inactive agents have no accessible worlds: vacuously true
        by_world[m_->world_index(w)] = v;
        if (pos < r.stem_len())
          stem[pos] = v;
        else
          loop[pos - r.stem_len()] = v;
      }
      return UPSet(std::move(stem), std::move(loop));
    }
    case Op::Common: {
      const Run& r = m_->runs[run];
      std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
      for (std::uint32_t pos = 0; pos < r.period_worlds(); ++pos) {
        const std::vector<bool>& reach = reachable_from(m_->world_index({run, pos}));
        bool v = true;
        for (std::uint32_t t = 0; t < reach.size() && v; ++t)
          if (reach[t]) v = holds_at_all_instances(m_->world_at(t), f.child());
        if (pos < r.stem_len())
          stem[pos] = v;
        else
          loop[pos - r.stem_len()] = v;
      }
      // C also requires the operand at the world itself (the E^0 conjunct).
      return up_and(truth_set(run, f.child()), UPSet(std::move(stem), std::move(loop)));
    }
    case Op::Prob: {
      const Run& r = m_->runs[run];
      std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
      for (std::uint32_t pos = 0; pos < r.period_worlds(); ++pos) {
        bool v = run_probability({run, pos}, f.child()) >= f.bound();
        if (pos < r.stem_len())
          stem[pos] = v;
        else
          loop[pos - r.stem_len()] = v;
      }
      return UPSet(std::move(stem), std::move(loop));
    }
    case Op::ProbA: {
      auto ai = m_->sig.index_of(f.agent());
      if (!ai) throw std::invalid_argument("unknown agent: " + f.agent());
      const Run& r = m_->runs[run];
      std::vector<bool> stem(r.stem_len()), loop(r.loop_len());
      for (std::uint32_t pos = 0; pos < r.period_worlds(); ++pos) {
        bool v = agent_probability({run, pos}, *ai, f.child()) >= f.bound();
        if (pos < r.stem_len())
          stem[pos] = v;
        else
          loop[pos - r.stem_len()] = v;
      }
      return UPSet(std::move(stem), std::move(loop));
    }
    default:
      throw std::invalid_argument("truth_set: not a core operator");
  }
}

bool Evaluator::holds(std::uint32_t run, std::uint64_t time, const Formula& f) {
  return holds_core(run, time, f.is_core() ? f : expand(f, m_->sig));
}

bool Evaluator::holds_core(std::uint32_t run, std::uint64_t time, const Formula& core) {
  if (run >= m_->runs.size()) throw std::out_of_range("run index out of range");
  return truth_set(run, core).member(time);
}

bool Evaluator::holds_at_all_instances(WorldId w, const Formula& core) {
  Instances inst = m_->instances(w);
  const UPSet& ts = truth_set(w.run, core);
  if (const SingleTime* st = std::get_if<SingleTime>(&inst)) return ts.member(st->time);
  const Progression& pr = std::get<Progression>(inst);
  return ts.all_in_progression(pr.first, pr.step);
}

bool Evaluator::common_holds(std::uint32_t run, std::uint64_t time, const Formula& core) {
  return holds_core(run, time, Formula::common(core));
}

Rat Evaluator::run_probability(WorldId w, const Formula& core) {
  const auto& weights = m_->run_measure[m_->world_index(w)];
  Rat sum(0);
  for (std::uint32_t r = 0; r < weights.size(); ++r) {
    if (weights[r] == Rat(0)) continue;
    if (truth_set(r, core).member(0)) sum += weights[r];
  }
  return sum;
}

Rat Evaluator::agent_probability(WorldId w, std::size_t agent_idx, const Formula& core) {
  const auto& samples = m_->agent_space[m_->world_index(w)][agent_idx];
  Rat sum(0);
  for (const Sample& s : samples) {
    if (s.weight == Rat(0)) continue;
    if (truth_set(s.run, core).member(s.time)) sum += s.weight;
  }
  return sum;
}

bool Evaluator::valid_in_model(const Formula& f) {
  Formula core = f.is_core() ? f : expand(f, m_->sig);
  for (std::uint32_t r = 0; r < m_->runs.size(); ++r)
    if (!truth_set(r, core).is_full()) return false;
  return true;
}

bool Evaluator::consequence_in_model(std::span<const Formula> theory, const Formula& f) {
  return !find_consequence_failure(theory, f).has_value();
}

std::optional<Evaluator::WorldRef> Evaluator::find_consequence_failure(
    std::span<const Formula> theory, const Formula& f) {
  Formula goal = f.is_core() ? f : expand(f, m_->sig);
  for (std::uint32_t r = 0; r < m_->runs.size(); ++r) {
    UPSet bad = up_complement(truth_set(r, goal));
    for (const Formula& t : theory) {
      Formula tc = t.is_core() ? t : expand(t, m_->sig);
      bad = up_and(bad, truth_set(r, tc));
    }
    std::uint64_t n;
    if (bad.first_member(n)) return WorldRef{r, n};
  }
  return std::nullopt;
}

}  // namespace ptel
