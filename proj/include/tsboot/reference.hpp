#pragma once

#include "tsboot/bound.hpp"
#include "tsboot/crossval.hpp"
#include "tsboot/harness.hpp"

namespace tsboot::reference {

/**
 * Serial reference implementations of the parallel Monte Carlo engines.
 *
 * These run the same per-replicate kernels in a plain loop with no OpenMP
 * orchestration.  They exist so tests can pin down the contract that the
 * parallel engines are byte-identical to a serial evaluation for any thread
 * count, and so the benchmark can report the speedup against a known
 * baseline.
 */

BoundResult gen_error_bound(const Series& series, const BoundConfig& config, RngStream rng);

CoverageReport coverage_experiment(const CoverageConfig& config, RngStream rng);

std::vector<double> sampling_distribution_eta(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                              std::size_t n_runs, std::size_t burnin, RngStream rng);

CvNormalitySamples cv_normality_samples(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                        std::size_t k, std::size_t n_runs, std::size_t burnin,
                                        RngStream rng);

}  // namespace tsboot::reference
