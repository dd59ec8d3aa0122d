#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsboot/ar_model.hpp"
#include "tsboot/cbb.hpp"
#include "tsboot/chunks.hpp"
#include "tsboot/rng.hpp"
#include "tsboot/series.hpp"

namespace tsboot {

struct BoundConfig {
  std::size_t d = 2;                 // chunk width, model order + 1
  std::size_t n_bootstrap = 500;     // B
  double alpha = 0.1;                // one-sided miss probability
  std::optional<std::size_t> ell;    // block length; empty = data-driven
};

/// Output of the bootstrap bound: upper_bound = train_error + eta_quantile,
/// where eta_quantile is the (1-alpha) empirical quantile of eta_samples.
struct BoundResult {
  double train_error = 0.0;
  std::vector<double> eta_samples;   // successful replicates, in replicate order
  double eta_quantile = 0.0;
  double upper_bound = 0.0;
  double alpha = 0.0;
  std::size_t ell_used = 0;
  std::uint64_t seed = 0;
  std::size_t n_failed = 0;          // degenerate replicates dropped (<= 1% of B)
  ArModel model;                     // the fit on the real data
};

/**
 * Bootstrap bound on prediction error.
 *
 * Fits an AR model on the linear chunks of the series and records its
 * training error; then for each of B bootstrap replicates draws an
 * independent train and test resample of t-d+1 rows each from the circular
 * chunks, refits on the train resample, and stores the generalization term
 * eta_i = (test error) - (bootstrap train error).  The upper bound adds the
 * (1-alpha) empirical quantile of the eta samples to the real training
 * error.
 *
 * Replicates whose resampled design is degenerate are dropped; more than 1%
 * of B dropped raises DegenerateDesignError.  Replicates run in parallel
 * when OpenMP is enabled and the result is identical for any thread count.
 */
BoundResult gen_error_bound(const Series& series, const BoundConfig& config, RngStream rng);

namespace detail {

/// One bootstrap replicate of the bound: returns the eta sample, or nothing
/// if the resampled fit was degenerate.  rng must be the replicate's own
/// stream; train and test resamples use child(0) and child(1).
std::optional<double> bound_replicate(const ChunkMatrix& circular_chunks, const CbbPlan& plan,
                                      const RngStream& replicate_rng);

}  // namespace detail

}  // namespace tsboot
