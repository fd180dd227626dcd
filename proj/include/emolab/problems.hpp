#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "emolab/bitstring.hpp"
#include "emolab/nk_landscape.hpp"
#include "emolab/objectives.hpp"
#include "emolab/rng.hpp"

namespace emolab {

struct OneMinMax {
    std::size_t n;
};

struct OneJumpZeroJump {
    std::size_t n;
    std::size_t k;
};

/// OneMinMax with the all-zeros string relocated to (-n, 2n).
struct OneMinMaxStar {
    std::size_t n;
};

struct NkLandscape {
    std::shared_ptr<const NkInstance> instance;
};

/// Benchmark problem description. Construct through the make_* helpers, which
/// validate parameters.
using ProblemSpec = std::variant<OneMinMax, OneJumpZeroJump, OneMinMaxStar, NkLandscape>;

ProblemSpec make_one_min_max(std::size_t n);
/// Throws ContractViolation unless 2 <= k <= n/4.
ProblemSpec make_one_jump_zero_jump(std::size_t n, std::size_t k);
ProblemSpec make_one_min_max_star(std::size_t n);
ProblemSpec make_nk_landscape(NkInstance instance);

/// Re-checks invariants of a spec built by hand.
void validate(const ProblemSpec& problem);

std::size_t problem_size(const ProblemSpec& problem);

/// Short label used in CSV output: omm, ojzj, ommstar, nk.
std::string problem_label(const ProblemSpec& problem);

/// Exact objective vector of x; throws ContractViolation on a length mismatch.
ObjectiveVector evaluate(const ProblemSpec& problem, const BitString& x);

enum class OjzjClass { InnerParetoSet, OuterParetoSet, NotParetoOptimal };

/// Pareto-set membership of x for OneJumpZeroJump(n, k), by |x|_1 alone.
OjzjClass classify_ojzj(const BitString& x, std::size_t n, std::size_t k);

/// Number of points on the Pareto front for the synthetic problems.
/// Throws UnsupportedProblem for NK.
std::size_t pareto_front_size(const ProblemSpec& problem);

/// Preferred target used as the stopping criterion: (0,n), (n+k,k), (-n,2n),
/// or a uniformly random point of the enumerated NK front.
ObjectiveVector default_reference_point(const ProblemSpec& problem, RngStream& rng);

}  // namespace emolab
