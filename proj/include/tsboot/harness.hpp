#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsboot/ar_model.hpp"
#include "tsboot/bound.hpp"
#include "tsboot/dgp.hpp"
#include "tsboot/rng.hpp"

namespace tsboot {

/// Monte Carlo estimate of the model's risk over a horizon of m steps.
struct RiskOracleResult {
  double risk = 0.0;
  std::size_t horizon = 0;
};

/**
 * Conditional risk on the realized continuation of the training run: the
 * context is the last d-1 training values, future holds the next m values
 * of the same realization; the result is the mean loss over the m chunks
 * whose response lies in the future segment.
 */
RiskOracleResult oracle_risk_continuation(std::span<const double> context,
                                          std::span<const double> future, const ArModel& model);

/**
 * Risk against an independent run of the process: simulates a fresh series
 * of m + d - 1 values and averages the loss over its m chunks.  Provided to
 * cross-check the continuation form, which is the default everywhere.
 */
RiskOracleResult oracle_risk_independent(const DgpSpec& dgp, const ArModel& model, std::size_t m,
                                         std::size_t burnin, RngStream rng);

enum class OracleMode { continuation, independent };

struct CoverageConfig {
  DgpSpec dgp;
  std::size_t d = 2;
  std::vector<std::size_t> sample_sizes;
  std::size_t n_outer = 500;
  std::size_t n_bootstrap = 500;
  double alpha = 0.1;
  std::optional<std::size_t> ell;            // empty = data-driven per replicate
  std::size_t oracle_horizon = 1000;
  OracleMode oracle_mode = OracleMode::continuation;
  std::size_t burnin = kDefaultBurnin;
};

/// Empirical coverage of the bootstrap upper bound, one entry per sample size.
struct CoverageReport {
  std::string dgp;
  std::size_t model_order = 0;
  double alpha = 0.0;
  std::vector<std::size_t> sample_sizes;
  std::vector<double> coverage;       // successes / (n_outer - failures)
  std::vector<std::size_t> failures;  // outer replicates that errored
  std::size_t n_outer = 0;
  std::size_t n_bootstrap = 0;
  std::size_t oracle_horizon = 0;
  std::uint64_t seed = 0;
};

/**
 * The coverage experiment: for every sample size n and every outer
 * replicate, simulate a fresh realization, compute the bootstrap bound on
 * its first n observations, measure the oracle risk over the horizon, and
 * record whether the oracle risk stayed at or below the upper bound.
 *
 * Failed replicates are excluded from the denominator; more than 2% of
 * n_outer failing at any sample size aborts the experiment.  Outer
 * replicates run in parallel; the report is byte-identical for any thread
 * count.
 */
CoverageReport coverage_experiment(const CoverageConfig& config, RngStream rng);

/**
 * The sampling distribution the bootstrap targets: for each run, simulate
 * one realization long enough for 2*t0 chunks (t0 = n - d + 1), fit on the
 * first t0 chunks, and return eta = (test error on the next t0 chunks) -
 * (training error).
 */
std::vector<double> sampling_distribution_eta(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                              std::size_t n_runs, std::size_t burnin, RngStream rng);

/// One point of a normal Q-Q plot.
struct QqPoint {
  double theoretical = 0.0;
  double sample = 0.0;
};

/// Sorted sample quantiles paired with normal quantiles at (i-0.5)/n.
/// Requires at least 100 samples.
std::vector<QqPoint> qq_data(std::span<const double> standardized_samples);

namespace detail {

struct CoverageOutcome {
  signed char covered = -1;  // 1 covered, 0 missed, -1 failed
};

/// One outer replicate of the coverage experiment (simulate, bound, oracle).
CoverageOutcome coverage_replicate(const CoverageConfig& config, std::size_t n,
                                   const RngStream& replicate_rng);

/// One run of the true sampling distribution (throws on fit failure).
double eta_run(const DgpSpec& dgp, std::size_t n, std::size_t d, std::size_t burnin,
               const RngStream& run_rng);

}  // namespace detail

}  // namespace tsboot
