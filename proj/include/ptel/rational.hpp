// Exact rational arithmetic used throughout: probability weights, thresholds
// and all measure comparisons are computed without rounding.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ptel {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) {
  return Rat(BigInt(num), BigInt(den));
}

inline bool in_unit_interval(const Rat& r) { return r >= Rat(0) && r <= Rat(1); }

// Canonical text form: "0", "1", "-3" for integers, otherwise "num/den".
std::string rat_string(const Rat& r);

// Accepts "num/den" and plain integers; returns nothing on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

// Smallest integer i with i >= r (r > 0). Used for index lower bounds of
// threshold-indexed rule premises.
std::uint64_t ceil_to_u64(const Rat& r);

}  // namespace ptel
