#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "emolab/experiment.hpp"

namespace emolab {

/// problem,n,k,variant,policy,pop_size,seed,evaluations,hit
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// problem,n,variant,mean_evals,std_evals,success_rate,runs
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// Throws ContractViolation on a malformed header or row.
std::vector<SummaryRow> read_summary_csv(std::istream& in);

}  // namespace emolab
