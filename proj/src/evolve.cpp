#include "emolab/evolve.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>

#include "emolab/errors.hpp"

namespace emolab {

AlgorithmConfig nsga2_config(std::size_t population_size, ObjectiveVector reference_point) {
    return AlgorithmConfig{CrowdingDistance{}, population_size, std::nullopt, reference_point, std::nullopt};
}

AlgorithmConfig rnsga2_config(std::size_t population_size, ObjectiveVector reference_point) {
    return AlgorithmConfig{ReferencePointDistance{reference_point}, population_size, std::nullopt, reference_point,
                           std::nullopt};
}

void validate(const AlgorithmConfig& config, const ProblemSpec& problem) {
    validate(problem);
    require(config.population_size >= 1, "AlgorithmConfig: population size must be at least 1");
    if (config.mutation_rate) {
        require(*config.mutation_rate > 0.0 && *config.mutation_rate <= 1.0,
                "AlgorithmConfig: mutation rate must lie in (0, 1]");
    }
    require(is_finite(config.reference_point), "AlgorithmConfig: reference point must be finite");
    if (const auto* ref = std::get_if<ReferencePointDistance>(&config.policy)) {
        require(is_finite(ref->z), "AlgorithmConfig: policy reference point must be finite");
    }
    if (config.max_evaluations) require(*config.max_evaluations > 0, "AlgorithmConfig: cap must be positive");
}

double effective_mutation_rate(const AlgorithmConfig& config, const ProblemSpec& problem) {
    return config.mutation_rate.value_or(1.0 / static_cast<double>(problem_size(problem)));
}

bool target_hit(const ObjectiveVector& objectives, const ObjectiveVector& z) noexcept {
    return objectives == z;
}

namespace {

void record_evaluation(RunState& state, const ObjectiveVector& f, const ObjectiveVector& z) {
    ++state.evaluations;
    if (!state.hit() && target_hit(f, z)) state.evaluations_to_hit = state.evaluations;
}

}  // namespace

RunState initialize(const ProblemSpec& problem, const AlgorithmConfig& config, std::uint64_t seed) {
    validate(config, problem);
    RunState state{{}, 0, 0, std::nullopt, RngStream(seed), 0};
    const std::size_t n = problem_size(problem);
    state.population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        BitString genome = random_bitstring(n, state.rng);
        const ObjectiveVector f = evaluate(problem, genome);
        record_evaluation(state, f, config.reference_point);
        state.population.push_back(Individual{std::move(genome), f, 0, std::numeric_limits<double>::quiet_NaN(),
                                              state.next_birth_index++});
    }
    return state;
}

void step_generation(RunState& state, const ProblemSpec& problem, const AlgorithmConfig& config) {
    const double rate = effective_mutation_rate(config, problem);
    std::vector<Individual> combined = std::move(state.population);
    const std::size_t parents = combined.size();
    combined.reserve(2 * parents);
    for (std::size_t i = 0; i < parents; ++i) {
        BitString child = bitwise_mutate(combined[i].genome, rate, state.rng);
        const ObjectiveVector f = evaluate(problem, child);
        record_evaluation(state, f, config.reference_point);
        combined.push_back(Individual{std::move(child), f, 0, std::numeric_limits<double>::quiet_NaN(),
                                      state.next_birth_index++});
    }
    state.population = survival_select(std::move(combined), config.population_size, config.policy);
    ++state.generation;
}

RunResult run(const ProblemSpec& problem, const AlgorithmConfig& config, std::uint64_t seed,
              const GenerationObserver& observer) {
    RunState state = initialize(problem, config, seed);
    if (observer) observer(state);
    while (!state.hit() && !(config.max_evaluations && state.evaluations >= *config.max_evaluations)) {
        step_generation(state, problem, config);
        if (observer) observer(state);
    }
    return RunResult{state.evaluations_to_hit, state.hit(), state.generation, state.evaluations, seed};
}

GenerationTrace trace_generation(const RunState& state, const ObjectiveVector& z, const ParetoFront* front) {
    GenerationTrace row;
    row.generation = state.generation;
    row.evaluations = state.evaluations;
    row.min_distance = std::numeric_limits<double>::infinity();
    std::set<ObjectiveVector> covered;
    for (const auto& ind : state.population) {
        row.min_distance = std::min(row.min_distance, euclidean_distance(ind.objectives, z));
        if (front && front->contains(ind.objectives)) covered.insert(ind.objectives);
    }
    if (front) row.front_points_covered = covered.size();
    return row;
}

void write_trace_header(std::ostream& out) { out << "generation,evaluations,min_distance,front_points_covered\n"; }

void write_trace_row(std::ostream& out, const GenerationTrace& row) {
    char distance[32];
    std::snprintf(distance, sizeof distance, "%.17g", row.min_distance);
    out << row.generation << ',' << row.evaluations << ',' << distance << ',';
    if (row.front_points_covered) out << *row.front_points_covered;
    out << '\n';
}

}  // namespace emolab
