#include "ptel/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptel {

std::string OrdinalRank::str() const {
  if (omega_coeff == 0) return std::to_string(finite);
  std::string s = "w*" + std::to_string(omega_coeff);
  if (finite != 0) s += "+" + std::to_string(finite);
  return s;
}

OrdinalRank rank(const Formula& f) {
  if (!f.is_core()) throw std::invalid_argument("rank: formula must be core");
  switch (f.op()) {
    case Op::Atom:
      return {0, 0};
    case Op::Common:
      return OrdinalRank{1, 0} + rank(f.child());
    case Op::And:
    case Op::Until:
    case Op::Since:
      return std::max(rank(f.child(0)), rank(f.child(1))) + OrdinalRank{0, 1};
    default:
      return rank(f.child()) + OrdinalRank{0, 1};
  }
}

}  // namespace ptel
