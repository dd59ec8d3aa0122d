#pragma once

#include <cstddef>
#include <vector>

#include "tsboot/ar_model.hpp"
#include "tsboot/dgp.hpp"
#include "tsboot/rng.hpp"
#include "tsboot/series.hpp"

namespace tsboot {

/**
 * Contiguous k-fold partition of t0 chunk indices.  Chunks overlap in time,
 * so folds are consecutive runs (never interleaved); the first t0 mod k
 * folds take one extra chunk.
 */
struct FoldAssignment {
  std::size_t k = 0;
  std::vector<std::size_t> fold_of_chunk;  // size t0

  static FoldAssignment contiguous(std::size_t t0, std::size_t k);

  /// [begin, end) chunk range of one fold.
  [[nodiscard]] std::pair<std::size_t, std::size_t> fold_range(std::size_t fold) const;
};

/**
 * k-fold cross-validated risk for an AR(d-1) model: for each fold, fit on
 * the union of the other folds' chunks and evaluate the mean loss on the
 * held-out fold; return the average of the k fold risks (n_terms = k).
 * Requires t0 >= 2k and k >= 2.
 */
RiskEstimate kfold_cv_risk(const Series& series, std::size_t d, std::size_t k);

/// Standardized cross-validated risks over independent simulated series.
struct CvNormalitySamples {
  std::vector<double> standardized;  // (R_cv - mean) / sd, run order
  double mean = 0.0;                 // of the raw R_cv values
  double sd = 0.0;                   // sample standard deviation (n-1)
  std::size_t n_failed = 0;          // runs whose fit was degenerate
};

/**
 * Simulate n_runs independent series of length n from the process spec and
 * compute the k-fold CV risk of each; returns the standardized values.
 * Runs execute in parallel with per-run streams; output is identical for
 * any thread count.  Requires n_runs >= 100.
 */
CvNormalitySamples cv_normality_samples(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                        std::size_t k, std::size_t n_runs, std::size_t burnin,
                                        RngStream rng);

}  // namespace tsboot
