#pragma once

// Single-threaded counterparts of the parallel kernels. They share the entry
// and seed derivations, so their outputs match the parallel ones bit for bit
// (sampling, records) or up to summation order (moment sums).

#include "wigner/harness.hpp"
#include "wigner/moments.hpp"

namespace wigner::reference {

WignerSample sample_wigner(std::size_t n, const EntryDistribution& dist, std::uint64_t seed);

/// Odometer walk over all n^k index tuples in lexicographic order.
double trace_moment_direct(std::size_t n, unsigned k, const MomentTable& table);

std::vector<RunRecord> run_monte_carlo(const ExperimentConfig& config);

} // namespace wigner::reference
