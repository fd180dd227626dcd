#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emolab/problems.hpp"

namespace emolab {

enum class ProblemFamilyKind { OneMinMax, OneJumpZeroJump, OneMinMaxStar, NkLandscape };

struct ProblemFamily {
    ProblemFamilyKind kind = ProblemFamilyKind::OneMinMax;
    /// Jump width for OneJumpZeroJump.
    std::size_t k = 0;
    /// Epistasis degree for NK-landscapes.
    std::size_t nk_K = 0;
    /// Number of NK instances generated per problem size; trial t runs on
    /// instance t mod nk_instances.
    std::size_t nk_instances = 1;
};

/// Population size as a function of the problem: a constant, or a multiple of
/// the Pareto-front size (4(n+1) for OneMinMax is front_multiple 4).
struct PopulationRule {
    enum class Kind { Fixed, FrontMultiple };
    Kind kind = Kind::Fixed;
    std::size_t value = 1;

    std::size_t resolve(const ProblemSpec& problem) const;
    std::string describe() const;
};

enum class PolicyKind { Crowding, Reference };

struct VariantSpec {
    std::string label;
    PolicyKind policy = PolicyKind::Crowding;
    PopulationRule population;
};

struct ExperimentPlan {
    std::string name;
    ProblemFamily family;
    std::vector<std::size_t> n_values;
    std::vector<VariantSpec> variants;
    std::size_t runs_per_cell = 1;
    std::uint64_t master_seed = 0;
    std::optional<std::uint64_t> max_evaluations;
};

/// Throws ContractViolation describing the first problem found.
void validate(const ExperimentPlan& plan);

struct TrialRecord {
    std::string problem;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::string variant;
    std::size_t variant_index = 0;
    std::string policy;
    std::size_t pop_size = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    /// Evaluations to the first hit, or the cap-crossing total on a miss.
    std::uint64_t evaluations = 0;
    bool hit = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SummaryRow {
    std::string problem;
    std::size_t n = 0;
    std::string variant;
    double mean_evaluations = 0.0;
    double std_evaluations = 0.0;
    double success_rate = 0.0;
    std::size_t runs = 0;
};

/// Seed of trial `trial` for variant `variant` at size n. Injective over
/// (n, variant, trial) within the bounds validate() enforces.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t n, std::size_t variant, std::size_t trial);

/// Problem instance for size n; for NK, instance `instance` of that size.
ProblemSpec build_problem(const ExperimentPlan& plan, std::size_t n, std::size_t instance = 0);

/// Reference point shared by every variant on this problem instance.
ObjectiveVector plan_reference_point(const ExperimentPlan& plan, const ProblemSpec& problem, std::size_t instance = 0);

/// Runs every (n, variant, trial) cell on up to `parallelism` threads.
/// Records come back ordered by (n, variant, trial), independent of
/// parallelism and completion order.
std::vector<TrialRecord> run_experiment(const ExperimentPlan& plan, std::size_t parallelism);

/// Mean, sample standard deviation and success rate per (problem, n, variant),
/// in order of first appearance. Throws ContractViolation on empty input.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

/// The four experiments: omm, ojzj, ommstar, nk.
std::map<std::string, ExperimentPlan> preset_plans();

inline constexpr std::uint64_t default_master_seed = 20240527;

}  // namespace emolab
