#include "ptel/upset.hpp"

#include <numeric>
#include <stdexcept>

namespace ptel {

namespace {

std::uint64_t lcm_sz(std::size_t a, std::size_t b) {
  return std::lcm<std::uint64_t>(a, b);
}

}  // namespace

UPSet::UPSet(std::vector<bool> stem, std::vector<bool> loop)
    : stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("UPSet loop must be non-empty");
  // Minimal period of the loop.
  for (std::size_t d = 1; d < loop_.size(); ++d) {
    if (loop_.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < loop_.size() && periodic; ++i)
      periodic = loop_[i] == loop_[i - d];
    if (periodic) {
      loop_.resize(d);
      break;
    }
  }
  // Absorb stem bits that already match the loop (rotating the loop right
  // keeps the phase aligned with the shortened stem).
  while (!stem_.empty() && stem_.back() == loop_.back()) {
    stem_.pop_back();
    bool last = loop_.back();
    loop_.pop_back();
    loop_.insert(loop_.begin(), last);
  }
}

bool UPSet::all_in_progression(std::uint64_t first, std::uint64_t step) const {
  if (step == 0) throw std::invalid_argument("progression step must be >= 1");
  const std::uint64_t s = stem_.size();
  const std::uint64_t cycle = lcm_sz(loop_.size(), step);
  // Values at indexes >= s repeat with period loop_.size(); along the
  // progression they repeat every cycle.  Reduce the start into [s, s+cycle)
  // when it is already past the stem, then one window of length cycle
  // covers all residues.
  std::uint64_t n = first;
  if (n >= s) n = s + (n - s) % cycle;
  const std::uint64_t horizon = s + cycle;
  for (; n < horizon; n += step)
    if (!member(n)) return false;
  return true;
}

bool UPSet::first_member(std::uint64_t& out) const {
  for (std::uint64_t n = 0; n < stem_.size(); ++n)
    if (stem_[n]) {
      out = n;
      return true;
    }
  for (std::uint64_t i = 0; i < loop_.size(); ++i)
    if (loop_[i]) {
      out = stem_.size() + i;
      return true;
    }
  return false;
}

namespace {

struct Aligned {
  std::vector<bool> a_stem, a_loop, b_stem, b_loop;
  std::size_t s, L;
};

Aligned align(const UPSet& a, const UPSet& b) {
  Aligned r;
  r.s = std::max(a.stem_size(), b.stem_size());
  r.L = static_cast<std::size_t>(lcm_sz(a.loop_size(), b.loop_size()));
  r.a_stem.resize(r.s);
  r.b_stem.resize(r.s);
  r.a_loop.resize(r.L);
  r.b_loop.resize(r.L);
  for (std::size_t n = 0; n < r.s; ++n) {
    r.a_stem[n] = a.member(n);
    r.b_stem[n] = b.member(n);
  }
  for (std::size_t i = 0; i < r.L; ++i) {
    r.a_loop[i] = a.member(r.s + i);
    r.b_loop[i] = b.member(r.s + i);
  }
  return r;
}

}  // namespace

UPSet up_complement(const UPSet& a) {
  std::vector<bool> stem(a.stem()), loop(a.loop());
  stem.flip();
  loop.flip();
  return UPSet(std::move(stem), std::move(loop));
}

UPSet up_and(const UPSet& a, const UPSet& b) {
  Aligned x = align(a, b);
  std::vector<bool> stem(x.s), loop(x.L);
  for (std::size_t n = 0; n < x.s; ++n) stem[n] = x.a_stem[n] && x.b_stem[n];
  for (std::size_t i = 0; i < x.L; ++i) loop[i] = x.a_loop[i] && x.b_loop[i];
  return UPSet(std::move(stem), std::move(loop));
}

UPSet up_or(const UPSet& a, const UPSet& b) {
  Aligned x = align(a, b);
  std::vector<bool> stem(x.s), loop(x.L);
  for (std::size_t n = 0; n < x.s; ++n) stem[n] = x.a_stem[n] || x.b_stem[n];
  for (std::size_t i = 0; i < x.L; ++i) loop[i] = x.a_loop[i] || x.b_loop[i];
  return UPSet(std::move(stem), std::move(loop));
}

UPSet up_next(const UPSet& a) {
  if (a.stem_size() > 0) {
    std::vector<bool> stem(a.stem().begin() + 1, a.stem().end());
    return UPSet(std::move(stem), a.loop());
  }
  std::vector<bool> loop(a.loop());
  bool head = loop.front();
  loop.erase(loop.begin());
  loop.push_back(head);
  return UPSet({}, std::move(loop));
}

UPSet up_weak_prev(const UPSet& a) {
  std::vector<bool> stem;
  stem.reserve(a.stem_size() + 1);
  stem.push_back(true);
  stem.insert(stem.end(), a.stem().begin(), a.stem().end());
  return UPSet(std::move(stem), a.loop());
}

UPSet up_until(const UPSet& a, const UPSet& b) {
  Aligned x = align(a, b);
  const std::size_t s = x.s, L = x.L;
  std::vector<bool> u_loop(L);
  for (std::size_t i = 0; i < L; ++i) {
    bool value = false;
    for (std::size_t t = 0; t < L; ++t) {
      std::size_t j = (i + t) % L;
      if (x.b_loop[j]) {
        value = true;
        break;
      }
      if (!x.a_loop[j]) break;
      // A holds everywhere on the cycle and B nowhere: no witness exists.
    }
    u_loop[i] = value;
  }
  std::vector<bool> u_stem(s);
  bool next = u_loop.empty() ? false : u_loop[0];
  for (std::size_t n = s; n-- > 0;) {
    u_stem[n] = x.b_stem[n] || (x.a_stem[n] && next);
    next = u_stem[n];
  }
  return UPSet(std::move(u_stem), std::move(u_loop));
}

UPSet up_since(const UPSet& a, const UPSet& b) {
  Aligned x = align(a, b);
  const std::size_t s = x.s, L = x.L;
  std::vector<bool> st_stem(s);
  bool state = false;
  for (std::size_t n = 0; n < s; ++n) {
    state = x.b_stem[n] || (x.a_stem[n] && state);
    st_stem[n] = state;
  }
  auto lap = [&](bool entry, std::vector<bool>& out) {
    bool st = entry;
    out.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
      st = x.b_loop[i] || (x.a_loop[i] && st);
      out[i] = st;
    }
    return st;
  };
  std::vector<bool> lap1;
  bool e1 = lap(state, lap1);
  if (e1 == state) return UPSet(std::move(st_stem), std::move(lap1));
  std::vector<bool> lap2;
  bool e2 = lap(e1, lap2);
  if (e2 != e1)
    throw std::logic_error("up_since: lap transfer failed to stabilize after one extension");
  st_stem.insert(st_stem.end(), lap1.begin(), lap1.end());
  return UPSet(std::move(st_stem), std::move(lap2));
}

}  // namespace ptel
