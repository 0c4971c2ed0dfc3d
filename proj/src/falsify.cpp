#include "ptel/falsify.hpp"

#include "ptel/semantics.hpp"

namespace ptel {

std::optional<Countermodel> falsify(std::span<const Formula> theory, const Formula& goal,
                                    std::uint64_t budget, const GenParams& params) {
  for (std::uint64_t i = 0; i < budget; ++i) {
    GenParams p = params;
    p.seed = params.seed + i;
    Model m = gen_model(p);
    Evaluator ev(m);
    if (auto w = ev.find_consequence_failure(theory, goal))
      return Countermodel{std::move(m), w->run, w->time, p.seed};
  }
  return std::nullopt;
}

}  // namespace ptel
