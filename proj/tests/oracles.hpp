#pragma once

// Brute-force reference computations used only by tests. None of these share
// code paths with the library implementations they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "emolab/objectives.hpp"

namespace oracle {

inline bool weakly_better(const emolab::ObjectiveVector& a, const emolab::ObjectiveVector& b) {
    return a[0] >= b[0] && a[1] >= b[1];
}

inline bool strictly_dominates(const emolab::ObjectiveVector& a, const emolab::ObjectiveVector& b) {
    return weakly_better(a, b) && (a[0] > b[0] || a[1] > b[1]);
}

/// Repeatedly strips the non-dominated subset of the remaining points.
/// Returns the front index (starting at 1) of each input.
inline std::vector<std::size_t> strip_partition(const std::vector<emolab::ObjectiveVector>& pts) {
    std::vector<std::size_t> rank(pts.size(), 0);
    std::size_t assigned = 0;
    for (std::size_t level = 1; assigned < pts.size(); ++level) {
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (rank[i] != 0) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
                if (rank[j] == 0 && strictly_dominates(pts[j], pts[i])) dominated = true;
            }
            if (!dominated) layer.push_back(i);
        }
        for (const std::size_t i : layer) rank[i] = level;
        assigned += layer.size();
    }
    return rank;
}

/// Non-dominated subset of a point cloud with duplicates removed, sorted
/// lexicographically.
inline std::vector<emolab::ObjectiveVector> nondominated(std::vector<emolab::ObjectiveVector> pts) {
    std::vector<emolab::ObjectiveVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) dominated = strictly_dominates(pts[j], pts[i]);
        if (dominated) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || (o[0] == pts[i][0] && o[1] == pts[i][1]);
        if (!seen) out.push_back(pts[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Mann-Whitney U of a by direct pair counting.
inline double pair_count_u(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0.0;
    for (const double x : a) {
        for (const double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    }
    return u;
}

/// Least-squares slope through the normal equations in raw sums.
inline double normal_equation_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace oracle
