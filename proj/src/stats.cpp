#include "emolab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "emolab/errors.hpp"

namespace emolab {

double mean(std::span<const double> xs) {
    require(!xs.empty(), "mean: empty sample");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (const double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double median(std::vector<double> xs) {
    require(!xs.empty(), "median: empty sample");
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

StatTestResult rank_sum_test(std::span<const double> a, std::span<const double> b) {
    require(a.size() >= 2 && b.size() >= 2, "rank_sum_test: each sample needs at least 2 values");
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t total = na + nb;

    struct Obs {
        double value;
        bool first;
    };
    std::vector<Obs> pooled;
    pooled.reserve(total);
    for (const double x : a) pooled.push_back({x, true});
    for (const double x : b) pooled.push_back({x, false});
    std::sort(pooled.begin(), pooled.end(), [](const Obs& l, const Obs& r) { return l.value < r.value; });

    // Midranks; tie_term accumulates t^3 - t over tie groups.
    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < total;) {
        std::size_t j = i;
        while (j < total && pooled[j].value == pooled[i].value) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t) {
            if (pooled[t].first) rank_sum_a += midrank;
        }
        const auto t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    const auto dna = static_cast<double>(na);
    const auto dnb = static_cast<double>(nb);
    const auto dn = static_cast<double>(total);
    StatTestResult result;
    result.statistic = rank_sum_a - dna * (dna + 1.0) / 2.0;
    const double expected = dna * dnb / 2.0;
    const double variance = dna * dnb / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (result.statistic < expected) {
        result.direction = SmallerGroup::First;
    } else if (result.statistic > expected) {
        result.direction = SmallerGroup::Second;
    }
    if (variance <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double z = (result.statistic - expected) / std::sqrt(variance);
    result.p_value = std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
    return result;
}

double loglog_slope(const std::vector<SummaryRow>& summary, const std::string& variant) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::set<std::size_t> sizes;
    for (const auto& row : summary) {
        if (row.variant != variant) continue;
        require(row.n > 0 && row.mean_evaluations > 0.0, "loglog_slope: sizes and means must be positive");
        xs.push_back(std::log(static_cast<double>(row.n)));
        ys.push_back(std::log(row.mean_evaluations));
        sizes.insert(row.n);
    }
    require(sizes.size() >= 3, "loglog_slope: need at least 3 distinct problem sizes for '" + variant + "'");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace emolab
