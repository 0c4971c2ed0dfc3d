// Model file serialization.  A model is a single JSON document:
//
// {
//   "agents": ["a1", ...],
//   "atoms":  ["p", ...],
//   "runs":   [{"stem": [["p",...], ...], "loop": [[...], ...]}, ...],
//   "access": {"a1": [[[run,pos],[run,pos]], ...], ...},
//   "run_measure":  {"run,pos": {"runIndex": "num/den", ...}, ...,
//                    "default": {...}},
//   "agent_spaces": {"run,pos,agent": [{"world":[run,time], "w":"num/den"}, ...],
//                    "default_agent": [...], "default": [...]}
// }
//
// "default" entries apply to every unlisted canonical world;
// "default_<agent>" applies to every unlisted world for that agent.
// Rationals are serialized as "num/den" strings.
#pragma once

#include <stdexcept>
#include <string>

#include "ptel/model.hpp"

namespace ptel {

struct ModelFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model model_from_json(const std::string& text);
std::string model_to_json(const Model& m);

Model load_model_file(const std::string& path);

}  // namespace ptel
