// Ordinal rank of core formulas, an ordinal below omega^2 written as
// omega*omega_coeff + finite.  The assignment makes the rank strictly
// decrease to proper subformulas and puts every expanded E^i gamma strictly
// below C gamma.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ptel/formula.hpp"

namespace ptel {

struct OrdinalRank {
  std::uint64_t omega_coeff = 0;
  std::uint64_t finite = 0;

  // Ordinal addition: (a,b) + (0,n) = (a, b+n); (a,b) + (c,d) = (a+c, d)
  // when c >= 1.
  OrdinalRank operator+(const OrdinalRank& o) const {
    if (o.omega_coeff == 0) return {omega_coeff, finite + o.finite};
    return {omega_coeff + o.omega_coeff, o.finite};
  }
  auto operator<=>(const OrdinalRank& o) const = default;

  std::string str() const;
};

// rk(atom) = 0; unary non-C operators add 1; binary operators take the
// lexicographic max of the children plus 1; rk(C gamma) = omega + rk(gamma).
// Requires a core formula.
OrdinalRank rank(const Formula& core);

}  // namespace ptel
