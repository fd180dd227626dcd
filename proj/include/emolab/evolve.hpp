#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "emolab/pareto_front.hpp"
#include "emolab/problems.hpp"
#include "emolab/rng.hpp"
#include "emolab/survival.hpp"

namespace emolab {

struct AlgorithmConfig {
    SurvivalPolicy policy;
    std::size_t population_size = 1;
    /// Per-bit flip probability; 1/n when unset.
    std::optional<double> mutation_rate;
    /// Termination target: the run stops once a solution with exactly these
    /// objectives has been evaluated.
    ObjectiveVector reference_point;
    /// Checked at generation boundaries; unbounded when unset.
    std::optional<std::uint64_t> max_evaluations;
};

/// NSGA-II with crowding-distance survival.
AlgorithmConfig nsga2_config(std::size_t population_size, ObjectiveVector reference_point);
/// R-NSGA-II: survival by distance to the reference point.
AlgorithmConfig rnsga2_config(std::size_t population_size, ObjectiveVector reference_point);

void validate(const AlgorithmConfig& config, const ProblemSpec& problem);

double effective_mutation_rate(const AlgorithmConfig& config, const ProblemSpec& problem);

struct RunState {
    std::vector<Individual> population;
    std::uint64_t generation = 0;
    std::uint64_t evaluations = 0;
    /// Evaluation count at the first evaluation matching the reference point.
    std::optional<std::uint64_t> evaluations_to_hit;
    RngStream rng;
    std::uint64_t next_birth_index = 0;

    bool hit() const noexcept { return evaluations_to_hit.has_value(); }
};

struct RunResult {
    std::optional<std::uint64_t> evaluations_to_hit;
    bool hit = false;
    std::uint64_t generations = 0;
    /// Total evaluations performed; equals evaluations_to_hit rounded up to the
    /// end of its generation on a hit, and the cap-crossing total on a miss.
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
};

bool target_hit(const ObjectiveVector& objectives, const ObjectiveVector& z) noexcept;

/// N uniformly random, evaluated individuals. Throws ContractViolation when
/// the configuration does not fit the problem.
RunState initialize(const ProblemSpec& problem, const AlgorithmConfig& config, std::uint64_t seed);

/// One generation of Algorithm 1: each parent yields one mutant, all N
/// offspring are evaluated, and survival_select keeps N of the 2N.
/// The configuration is not re-validated, so tests may pass a zero mutation
/// rate here.
void step_generation(RunState& state, const ProblemSpec& problem, const AlgorithmConfig& config);

/// Called after initialisation and after every generation.
using GenerationObserver = std::function<void(const RunState&)>;

/// Iterates generations until the reference point is evaluated or the cap is
/// reached at a generation boundary.
RunResult run(const ProblemSpec& problem, const AlgorithmConfig& config, std::uint64_t seed,
              const GenerationObserver& observer = {});

/// Per-generation diagnostics used for invariant checks and trace output.
struct GenerationTrace {
    std::uint64_t generation = 0;
    std::uint64_t evaluations = 0;
    double min_distance = 0.0;
    /// Distinct population objective vectors lying on the given front.
    std::optional<std::size_t> front_points_covered;
};

GenerationTrace trace_generation(const RunState& state, const ObjectiveVector& z, const ParetoFront* front);

/// CSV trace: generation,evaluations,min_distance,front_points_covered
void write_trace_header(std::ostream& out);
void write_trace_row(std::ostream& out, const GenerationTrace& row);

}  // namespace emolab
