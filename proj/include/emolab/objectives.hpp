#pragma once

#include <array>
#include <compare>
#include <string>

namespace emolab {

/// Bi-objective value under maximization. The dimension is fixed at two by
/// the type, so mismatched-dimension comparisons cannot be expressed.
struct ObjectiveVector {
    static constexpr std::size_t dimension = 2;

    std::array<double, dimension> values{};

    constexpr ObjectiveVector() = default;
    constexpr ObjectiveVector(double f1, double f2) : values{f1, f2} {}

    constexpr double operator[](std::size_t i) const { return values[i]; }
    constexpr double& operator[](std::size_t i) { return values[i]; }

    /// Exact componentwise equality; lexicographic order for sorted output.
    friend constexpr auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

enum class DominanceRelation { Dominates, DominatedBy, Equal, Incomparable };

/// Relation of a to b under maximization.
constexpr DominanceRelation dominance(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < ObjectiveVector::dimension; ++i) {
        a_better = a_better || a[i] > b[i];
        b_better = b_better || b[i] > a[i];
    }
    if (a_better && b_better) return DominanceRelation::Incomparable;
    if (a_better) return DominanceRelation::Dominates;
    if (b_better) return DominanceRelation::DominatedBy;
    return DominanceRelation::Equal;
}

inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    return dominance(a, b) == DominanceRelation::Dominates;
}

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b) noexcept;

bool is_finite(const ObjectiveVector& v) noexcept;

/// "f1 f2" with shortest round-trip formatting (integers print without a
/// fractional part).
std::string format_objectives(const ObjectiveVector& v);

std::string to_string(DominanceRelation r);

}  // namespace emolab
