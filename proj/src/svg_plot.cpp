#include "emolab/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "emolab/errors.hpp"

namespace emolab {

namespace {

constexpr std::array<const char*, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape_xml(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick_label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace

std::string render_summary_svg(const std::vector<SummaryRow>& rows, const PlotOptions& options) {
    require(!rows.empty(), "plot: summary has no rows");

    std::vector<std::string> variants;
    for (const auto& r : rows) {
        if (std::find(variants.begin(), variants.end(), r.variant) == variants.end()) variants.push_back(r.variant);
        if (options.log_y) {
            require(r.mean_evaluations > 0.0, "plot: log-scale axis needs positive means, found " +
                                                  tick_label(r.mean_evaluations) + " for " + r.variant);
        }
    }

    auto y_value = [&](double m) { return options.log_y ? std::log10(m) : m; };
    double x_lo = rows.front().n;
    double x_hi = x_lo;
    double y_lo = y_value(rows.front().mean_evaluations);
    double y_hi = y_lo;
    for (const auto& r : rows) {
        x_lo = std::min(x_lo, double(r.n));
        x_hi = std::max(x_hi, double(r.n));
        y_lo = std::min(y_lo, y_value(r.mean_evaluations));
        y_hi = std::max(y_hi, y_value(r.mean_evaluations));
    }
    if (!options.log_y) y_lo = std::min(y_lo, 0.0);
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    const double left = 80.0;
    const double right = options.width - 190.0;
    const double top = 30.0;
    const double bottom = options.height - 50.0;
    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); };
    auto py = [&](double y) { return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"black\"/>\n";
    svg << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"black\"/>\n";

    for (int t = 0; t <= 4; ++t) {
        const double y = y_lo + (y_hi - y_lo) * t / 4.0;
        const double label = options.log_y ? std::pow(10.0, y) : y;
        svg << "<text x=\"" << num(left - 6) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
            << tick_label(label) << "</text>\n";
    }
    std::vector<std::size_t> sizes;
    for (const auto& r : rows) sizes.push_back(r.n);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (const std::size_t n : sizes) {
        svg << "<text x=\"" << num(px(double(n))) << "\" y=\"" << num(bottom + 18) << "\" text-anchor=\"middle\">" << n
            << "</text>\n";
    }
    svg << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(bottom + 40)
        << "\" text-anchor=\"middle\">n</text>\n";
    svg << "<text transform=\"translate(18," << num((top + bottom) / 2)
        << ") rotate(-90)\" text-anchor=\"middle\">mean fitness evaluations" << (options.log_y ? " (log)" : "")
        << "</text>\n";

    for (std::size_t v = 0; v < variants.size(); ++v) {
        const char* colour = palette[v % palette.size()];
        std::vector<const SummaryRow*> series;
        for (const auto& r : rows) {
            if (r.variant == variants[v]) series.push_back(&r);
        }
        std::sort(series.begin(), series.end(), [](const SummaryRow* a, const SummaryRow* b) { return a->n < b->n; });
        svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series.size(); ++i) {
            svg << (i ? " " : "") << num(px(double(series[i]->n))) << ',' << num(py(y_value(series[i]->mean_evaluations)));
        }
        svg << "\"/>\n";
        for (const SummaryRow* r : series) {
            svg << "<circle class=\"marker\" cx=\"" << num(px(double(r->n))) << "\" cy=\""
                << num(py(y_value(r->mean_evaluations))) << "\" r=\"3.5\" fill=\"" << colour << "\"/>\n";
        }
        const double ly = top + 10 + 20.0 * static_cast<double>(v);
        svg << "<line class=\"legend\" x1=\"" << num(right + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(right + 40)
            << "\" y2=\"" << num(ly) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << num(right + 46) << "\" y=\"" << num(ly + 4) << "\">" << escape_xml(variants[v])
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace emolab
