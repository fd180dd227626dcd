#pragma once

#include <string>
#include <vector>

#include "emolab/experiment.hpp"

namespace emolab {

struct PlotOptions {
    bool log_y = false;
    int width = 640;
    int height = 420;
};

/// Line chart of mean evaluations against n, one polyline and one circle
/// marker per data point for each variant, with a legend. Throws
/// ContractViolation when there is nothing to plot or when log_y meets a
/// non-positive mean.
std::string render_summary_svg(const std::vector<SummaryRow>& rows, const PlotOptions& options = {});

}  // namespace emolab
