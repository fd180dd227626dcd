#pragma once

#include <string>

#include "emolab/experiment.hpp"

namespace emolab {

/// JSON document mirroring ExperimentPlan:
///
///   {"name": "omm",
///    "problem": {"family": "omm"|"ojzj"|"ommstar"|"nk", "k": 2, "K": 3, "instances": 1},
///    "n_values": [10, 20],
///    "variants": [{"label": "...", "policy": "crowding"|"reference",
///                  "population": {"fixed": 1} | {"front_multiple": 4}}],
///    "runs_per_cell": 1000, "master_seed": 7, "max_evaluations": 100000 | null}
std::string plan_to_json(const ExperimentPlan& plan);

/// Throws ContractViolation on malformed documents.
ExperimentPlan plan_from_json(const std::string& text);

}  // namespace emolab
