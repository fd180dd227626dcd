#include "emolab/objectives.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace emolab {

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    const double d0 = a[0] - b[0];
    const double d1 = a[1] - b[1];
    return std::sqrt(d0 * d0 + d1 * d1);
}

bool is_finite(const ObjectiveVector& v) noexcept {
    return std::isfinite(v[0]) && std::isfinite(v[1]);
}

namespace {
std::string format_real(double x) {
    char buf[32];
    if (x == std::trunc(x) && std::abs(x) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    // %.17g always round-trips; try shorter precisions first for readability.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}
}  // namespace

std::string format_objectives(const ObjectiveVector& v) {
    return format_real(v[0]) + " " + format_real(v[1]);
}

std::string to_string(DominanceRelation r) {
    switch (r) {
        case DominanceRelation::Dominates: return "Dominates";
        case DominanceRelation::DominatedBy: return "DominatedBy";
        case DominanceRelation::Equal: return "Equal";
        case DominanceRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

}  // namespace emolab
