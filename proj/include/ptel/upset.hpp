// Ultimately periodic subsets of the naturals, the truth set of a formula
// along one run.  A set is stored as stem bits followed by a forever
// repeating loop; construction normalizes to the unique minimal form
// (shortest loop, then maximal stem trimming), so operator== decides
// extensional equality.
#pragma once

#include <cstdint>
#include <vector>

namespace ptel {

class UPSet {
 public:
  // loop must be non-empty; normalizes.
  UPSet(std::vector<bool> stem, std::vector<bool> loop);

  static UPSet empty_set() { return UPSet({}, {false}); }
  static UPSet full_set() { return UPSet({}, {true}); }

  bool member(std::uint64_t n) const {
    if (n < stem_.size()) return stem_[n];
    return loop_[(n - stem_.size()) % loop_.size()];
  }

  const std::vector<bool>& stem() const { return stem_; }
  const std::vector<bool>& loop() const { return loop_; }
  std::size_t stem_size() const { return stem_.size(); }
  std::size_t loop_size() const { return loop_.size(); }

  bool is_empty() const { return stem_.empty() && !loop_[0]; }
  bool is_full() const { return stem_.empty() && loop_.size() == 1 && loop_[0]; }

  // Membership of every element of {first + t*step : t >= 0} (step >= 1).
  bool all_in_progression(std::uint64_t first, std::uint64_t step) const;

  // Smallest member, if the set is non-empty.
  bool first_member(std::uint64_t& out) const;

  bool operator==(const UPSet& o) const { return stem_ == o.stem_ && loop_ == o.loop_; }
  bool operator!=(const UPSet& o) const { return !(*this == o); }

 private:
  std::vector<bool> stem_;
  std::vector<bool> loop_;
};

UPSet up_complement(const UPSet& a);
UPSet up_and(const UPSet& a, const UPSet& b);
UPSet up_or(const UPSet& a, const UPSet& b);

// member'(n) = member(n+1).
UPSet up_next(const UPSet& a);
// member'(0) = true; member'(n) = member(n-1) for n >= 1.
UPSet up_weak_prev(const UPSet& a);
// Least solution of u(n) = B(n) or (A(n) and u(n+1)): membership requires an
// actual B witness at some j >= n with A holding on [n, j).
UPSet up_until(const UPSet& a, const UPSet& b);
// Forward recurrence s(n) = B(n) or (A(n) and s(n-1)), s(-1) = false.  The
// loop lap transfer is monotone, so the stem is extended by at most one lap.
UPSet up_since(const UPSet& a, const UPSet& b);

}  // namespace ptel
