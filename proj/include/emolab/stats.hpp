#pragma once

#include <span>
#include <string>
#include <vector>

#include "emolab/experiment.hpp"

namespace emolab {

double mean(std::span<const double> xs);
/// Sample standard deviation (divisor n-1); 0 for a single value.
double sample_std(std::span<const double> xs);
double median(std::vector<double> xs);

enum class SmallerGroup { First, Second, Neither };

struct StatTestResult {
    /// Mann-Whitney U of the first sample: pairs (a_i, b_j) with a_i > b_j,
    /// ties counting one half.
    double statistic = 0.0;
    double p_value = 1.0;
    SmallerGroup direction = SmallerGroup::Neither;
};

/// Two-sided Mann-Whitney rank-sum test, normal approximation with tie
/// correction. Throws ContractViolation unless both samples hold >= 2 values.
StatTestResult rank_sum_test(std::span<const double> a, std::span<const double> b);

/// Least-squares slope of log(mean_evaluations) on log(n) over the rows of one
/// variant. Throws ContractViolation with fewer than 3 distinct n values.
double loglog_slope(const std::vector<SummaryRow>& summary, const std::string& variant);

}  // namespace emolab
