#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "emolab/bitstring.hpp"
#include "emolab/objectives.hpp"
#include "emolab/problems.hpp"

namespace emolab {

/// Mutually non-dominated objective vectors in ascending lexicographic order.
/// When witnesses are present they run parallel to points.
struct ParetoFront {
    std::vector<ObjectiveVector> points;
    std::optional<std::vector<BitString>> witnesses;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(const ObjectiveVector& v) const;
};

/// Largest n accepted by exhaustive enumeration.
inline constexpr std::size_t enumeration_limit = 25;

/// Front from the closed-form expressions; throws UnsupportedProblem for NK.
ParetoFront pareto_front_closed_form(const ProblemSpec& problem);

/// Front obtained by evaluating all 2^n strings. The witness for each point is
/// the first string reaching it in enumeration order (the integer v maps to
/// the string whose position i holds bit i of v). Throws SizeGuardError when
/// n > enumeration_limit.
ParetoFront enumerate_pareto_front(const ProblemSpec& problem, bool witness = false);

}  // namespace emolab
