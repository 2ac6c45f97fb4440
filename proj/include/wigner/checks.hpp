#pragma once

#include "wigner/harness.hpp"
#include "wigner/records.hpp"

#include <span>
#include <vector>

namespace wigner {

/// Adds what the enabled checks need to the recorded statistics (moment
/// powers, kept eigenvalues) and throws config when a check lacks its inputs
/// or the replica count is below the estimator's minimum.
ExperimentConfig prepare_for_checks(ExperimentConfig config);

/// Summary rows for every enabled check. A row passes when value <= tolerance,
/// except rows whose statistic ends in "p_value", which pass when
/// value > tolerance.
std::vector<SummaryRow> run_checks(const ExperimentConfig& config, std::span<const RunRecord> records);

} // namespace wigner
