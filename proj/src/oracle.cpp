#include "ptel/oracle.hpp"

#include <unordered_map>
#include <stdexcept>

namespace ptel {

TriBool tri_not(TriBool a) {
  if (a == TriBool::Unknown) return TriBool::Unknown;
  return a == TriBool::True ? TriBool::False : TriBool::True;
}

TriBool tri_and(TriBool a, TriBool b) {
  if (a == TriBool::False || b == TriBool::False) return TriBool::False;
  if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
  return TriBool::True;
}

TriBool tri_or(TriBool a, TriBool b) {
  if (a == TriBool::True || b == TriBool::True) return TriBool::True;
  if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
  return TriBool::False;
}

const char* tri_str(TriBool a) {
  switch (a) {
    case TriBool::False: return "false";
    case TriBool::True: return "true";
    case TriBool::Unknown: return "unknown";
  }
  return "?";
}

namespace {

bool is_literal(const Formula& f) {
  return f.op() == Op::Atom || (f.op() == Op::Not && f.child().op() == Op::Atom);
}

struct MemoKey {
  Formula f;
  std::uint32_t run;
  std::uint64_t time;
  bool operator==(const MemoKey& o) const {
    return run == o.run && time == o.time && f == o.f;
  }
};
struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return k.f.hash() * 0x9e3779b9u + k.run * 131u + static_cast<std::size_t>(k.time);
  }
};
struct EKey {
  Formula f;
  std::size_t k;
  std::uint32_t world;
  bool operator==(const EKey& o) const { return k == o.k && world == o.world && f == o.f; }
};
struct EKeyHash {
  std::size_t operator()(const EKey& e) const {
    return e.f.hash() * 0x85ebca6bu + e.k * 977u + e.world;
  }
};

struct Oracle {
  const Model& m;
  std::uint64_t horizon;
  std::unordered_map<MemoKey, TriBool, MemoKeyHash> memo;
  std::unordered_map<EKey, TriBool, EKeyHash> e_memo;

  Oracle(const Model& mm, std::uint64_t h) : m(mm), horizon(h) {}

  // Latest time at which the value of `f` along `run` may still differ from
  // its loop-periodic tail.
  std::uint64_t stabilization_bound(const Formula& f, std::uint32_t run) const {
    const Run& r = m.runs[run];
    return r.stem_len() + (f.depth() + 1) * r.loop_len();
  }

  TriBool all_instances(WorldId w, const Formula& f) {
    Instances inst = m.instances(w);
    if (const SingleTime* st = std::get_if<SingleTime>(&inst)) return eval(w.run, st->time, f);
    const Progression& pr = std::get<Progression>(inst);
    std::uint64_t last = stabilization_bound(f, w.run);
    TriBool acc = TriBool::True;
    for (std::uint64_t t = pr.first;; t += pr.step) {
      acc = tri_and(acc, eval(w.run, t, f));
      if (acc == TriBool::False) return acc;
      if (t >= last) break;
    }
    return acc;
  }

  TriBool eval(std::uint32_t run, std::uint64_t n, const Formula& f) {
    MemoKey key{f, run, n};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    TriBool v = eval_uncached(run, n, f);
    memo.emplace(std::move(key), v);
    return v;
  }

  TriBool eval_uncached(std::uint32_t run, std::uint64_t n, const Formula& f) {
    switch (f.op()) {
      case Op::Atom:
        return tri(m.runs[run].valuation(n).count(f.name()) > 0);
      case Op::Not:
        return tri_not(eval(run, n, f.child()));
      case Op::And:
        return tri_and(eval(run, n, f.child(0)), eval(run, n, f.child(1)));
      case Op::Next:
        return eval(run, n + 1, f.child());
      case Op::WeakPrev:
        if (n == 0) return TriBool::True;
        return eval(run, n - 1, f.child());
      case Op::Until:
        return eval_until(run, n, f.child(0), f.child(1));
      case Op::Since:
        return eval_since(run, n, f.child(0), f.child(1));
      case Op::Know:
        return eval_know(run, n, f.agent(), f.child());
      case Op::Common:
        return eval_common(run, n, f.child());
      case Op::Prob:
        return eval_prob(run, n, f);
      case Op::ProbA:
        return eval_proba(run, n, f);
      default:
        throw std::invalid_argument("oracle: formula must be core");
    }
  }

  TriBool eval_until(std::uint32_t run, std::uint64_t n, const Formula& a, const Formula& b) {
    TriBool prefix = TriBool::True;  // a over [n, j)
    bool saw_possible = false;
    bool all_b_definitely_false = true;
    for (std::uint64_t j = n; j <= horizon; ++j) {
      TriBool bj = eval(run, j, b);
      if (bj != TriBool::False) all_b_definitely_false = false;
      TriBool witness = tri_and(bj, prefix);
      if (witness == TriBool::True) return TriBool::True;
      if (witness == TriBool::Unknown) saw_possible = true;
      prefix = tri_and(prefix, eval(run, j, a));
      if (prefix == TriBool::False) return saw_possible ? TriBool::Unknown : TriBool::False;
    }
    const Run& r = m.runs[run];
    std::uint64_t literal_cover = std::max<std::uint64_t>(n, r.stem_len()) + r.loop_len() - 1;
    if (is_literal(b) && all_b_definitely_false && horizon >= literal_cover)
      return TriBool::False;  // atom values repeat; no witness can ever appear
    return TriBool::Unknown;
  }

  TriBool eval_since(std::uint32_t run, std::uint64_t n, const Formula& a, const Formula& b) {
    TriBool suffix = TriBool::True;  // a over (j, n]
    TriBool acc = TriBool::False;
    for (std::uint64_t j = n;; --j) {
      acc = tri_or(acc, tri_and(eval(run, j, b), suffix));
      if (acc == TriBool::True) return TriBool::True;
      suffix = tri_and(suffix, eval(run, j, a));
      if (suffix == TriBool::False) return acc;
      if (j == 0) break;
    }
    return acc;
  }

  TriBool eval_know(std::uint32_t run, std::uint64_t n, const std::string& agent,
                    const Formula& body) {
    WorldId w = m.canon(run, n);
    if (!m.active(agent, w)) return TriBool::True;  // dead end
    std::size_t ai = *m.sig.index_of(agent);
    TriBool acc = TriBool::True;
    for (std::uint32_t t : m.access[ai][m.world_index(w)]) {
      acc = tri_and(acc, all_instances(m.world_at(t), body));
      if (acc == TriBool::False) return acc;
    }
    return acc;
  }

  // E^k, evaluated straight from the definition.  For k >= 1 the value is
  // determined by the canonical world (activity, accessibility and instance
  // sets all are), so one representative per canonical target suffices and
  // results memoize per (k, world).
  TriBool eval_e(std::size_t k, std::uint32_t run, std::uint64_t n, const Formula& body) {
    if (k == 0) return eval(run, n, body);
    WorldId w = m.canon(run, n);
    EKey key{body, k, m.world_index(w)};
    auto it = e_memo.find(key);
    if (it != e_memo.end()) return it->second;
    TriBool acc = TriBool::True;
    for (std::size_t ai = 0; ai < m.sig.size() && acc != TriBool::False; ++ai) {
      const std::string& agent = m.sig.agents()[ai];
      if (!m.active(agent, w)) continue;  // K_a conjunct vacuously true
      for (std::uint32_t t : m.access[ai][m.world_index(w)]) {
        WorldId target = m.world_at(t);
        TriBool v;
        if (k - 1 >= 1) {
          v = eval_e(k - 1, target.run, target.pos, body);
        } else {
          v = all_instances(target, body);
        }
        acc = tri_and(acc, v);
        if (acc == TriBool::False) break;
      }
    }
    e_memo[key] = acc;
    return acc;
  }

  TriBool eval_common(std::uint32_t run, std::uint64_t n, const Formula& body) {
    TriBool acc = TriBool::True;
    for (std::size_t k = 0; k <= m.world_count(); ++k) {
      acc = tri_and(acc, eval_e(k, run, n, body));
      if (acc == TriBool::False) return acc;
    }
    return acc;
  }

  TriBool eval_prob(std::uint32_t run, std::uint64_t n, const Formula& f) {
    WorldId w = m.canon(run, n);
    const auto& weights = m.run_measure[m.world_index(w)];
    Rat lower(0), possible(0);
    for (std::uint32_t r = 0; r < weights.size(); ++r) {
      if (weights[r] == Rat(0)) continue;
      TriBool v = eval(r, 0, f.child());
      if (v == TriBool::True) lower += weights[r];
      if (v == TriBool::Unknown) possible += weights[r];
    }
    if (lower >= f.bound()) return TriBool::True;
    if (lower + possible < f.bound()) return TriBool::False;
    return TriBool::Unknown;
  }

  TriBool eval_proba(std::uint32_t run, std::uint64_t n, const Formula& f) {
    WorldId w = m.canon(run, n);
    std::size_t ai = *m.sig.index_of(f.agent());
    const auto& samples = m.agent_space[m.world_index(w)][ai];
    Rat lower(0), possible(0);
    for (const Sample& s : samples) {
      if (s.weight == Rat(0)) continue;
      TriBool v = eval(s.run, s.time, f.child());
      if (v == TriBool::True) lower += s.weight;
      if (v == TriBool::Unknown) possible += s.weight;
    }
    if (lower >= f.bound()) return TriBool::True;
    if (lower + possible < f.bound()) return TriBool::False;
    return TriBool::Unknown;
  }
};

}  // namespace

TriBool brute_force_holds(const Model& m, std::uint32_t run, std::uint64_t time,
                          const Formula& f, std::uint64_t horizon) {
  if (run >= m.runs.size()) throw std::out_of_range("run index out of range");
  Oracle o(m, horizon);
  Formula core = f.is_core() ? f : expand(f, m.sig);
  return o.eval(run, time, core);
}

}  // namespace ptel
