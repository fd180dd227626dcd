#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "emolab/bitstring.hpp"
#include "emolab/objectives.hpp"

namespace emolab {

struct Individual {
    BitString genome;
    ObjectiveVector objectives;
    /// Front index starting at 1; 0 while unsorted.
    std::size_t rank = 0;
    /// Crowding distance or reference distance from the last truncation that
    /// examined this individual; NaN when unset.
    double survival_key = std::numeric_limits<double>::quiet_NaN();
    /// Creation order, used to break ties deterministically.
    std::uint64_t birth_index = 0;
};

/// Fronts F1, F2, ... as indices into the sorted population.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

struct CrowdingDistance {};

struct ReferencePointDistance {
    ObjectiveVector z;
};

using SurvivalPolicy = std::variant<CrowdingDistance, ReferencePointDistance>;

/// Deb's fast non-dominated sorting. Sets each individual's rank. Individuals
/// sharing an objective vector land in the same front. F1 lists members in
/// input order; later fronts in the order their domination counts reach zero.
FrontPartition fast_nondominated_sort(std::span<Individual> pop);

/// Crowding distance of each listed member of pop, computed once over the
/// front they form. Each objective sorts ascending (ties by birth_index); the
/// first and last get +inf and interior members accumulate the normalised gap
/// between their neighbours. An objective whose values are all equal adds 0.
std::vector<double> crowding_distance_assign(std::span<const Individual> pop, std::span<const std::size_t> members);
std::vector<double> crowding_distance_assign(std::span<const Individual> front);

/// Euclidean distance of each listed member's objectives to z.
std::vector<double> reference_distances(std::span<const Individual> pop, std::span<const std::size_t> members,
                                        const ObjectiveVector& z);
std::vector<double> reference_distances(std::span<const Individual> front, const ObjectiveVector& z);

/// Environmental selection of Algorithm 1: whole fronts are admitted while
/// they fit, then the critical front is ordered by the policy key (crowding
/// distance descending, reference distance ascending; ties by birth_index)
/// and truncated. Returns exactly capacity survivors.
///
/// Throws ContractViolation when combined.size() < capacity.
std::vector<Individual> survival_select(std::vector<Individual> combined, std::size_t capacity,
                                        const SurvivalPolicy& policy);

}  // namespace emolab
