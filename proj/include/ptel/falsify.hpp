// Bounded countermodel search: enumerate seeded random models and look for
// a world satisfying the theory together with the negation of the goal.
// Absence of a countermodel within the budget proves nothing.
#pragma once

#include <optional>
#include <span>

#include "ptel/gen.hpp"
#include "ptel/model.hpp"

namespace ptel {

struct Countermodel {
  Model model;
  std::uint32_t run;
  std::uint64_t time;
  std::uint64_t seed;
};

std::optional<Countermodel> falsify(std::span<const Formula> theory, const Formula& goal,
                                    std::uint64_t budget, const GenParams& params);

}  // namespace ptel
