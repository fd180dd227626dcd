#include "emolab/results_csv.hpp"

#include <cstdio>
#include <sstream>
#include <string>

#include "emolab/errors.hpp"

namespace emolab {

namespace {

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_real(const std::string& text, const char* column) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ContractViolation(std::string("summary csv: bad ") + column + " value '" + text + "'");
    }
    return value;
}

}  // namespace

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "problem,n,k,variant,policy,pop_size,seed,evaluations,hit\n";
    for (const auto& r : records) {
        out << r.problem << ',' << r.n << ',';
        if (r.k) out << *r.k;
        out << ',' << r.variant << ',' << r.policy << ',' << r.pop_size << ',' << r.seed << ',' << r.evaluations
            << ',' << (r.hit ? 1 : 0) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "problem,n,variant,mean_evals,std_evals,success_rate,runs\n";
    for (const auto& r : rows) {
        out << r.problem << ',' << r.n << ',' << r.variant << ',' << fmt_real(r.mean_evaluations) << ','
            << fmt_real(r.std_evaluations) << ',' << fmt_real(r.success_rate) << ',' << r.runs << '\n';
    }
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ContractViolation("summary csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "problem,n,variant,mean_evals,std_evals,success_rate,runs") {
        throw ContractViolation("summary csv: unexpected header '" + line + "'");
    }
    std::vector<SummaryRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 7) {
            throw ContractViolation("summary csv: line " + std::to_string(line_no) + " has " +
                                    std::to_string(f.size()) + " fields");
        }
        SummaryRow r;
        r.problem = f[0];
        r.n = static_cast<std::size_t>(parse_real(f[1], "n"));
        r.variant = f[2];
        r.mean_evaluations = parse_real(f[3], "mean_evals");
        r.std_evaluations = parse_real(f[4], "std_evals");
        r.success_rate = parse_real(f[5], "success_rate");
        r.runs = static_cast<std::size_t>(parse_real(f[6], "runs"));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace emolab
