#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsboot/chunks.hpp"

namespace tsboot {

/**
 * Coefficients of an AR(p) predictor without intercept.
 *
 * theta[j] multiplies chunk column j (oldest lag first, most recent lag
 * last); the prediction for a chunk z of width d = p+1 is
 * theta . z[0..p-1] and the response is z[p].
 */
struct ArModel {
  std::vector<double> theta;

  [[nodiscard]] std::size_t order() const { return theta.size(); }
  [[nodiscard]] std::size_t chunk_width() const { return theta.size() + 1; }
};

/// A mean of n_terms nonnegative losses.
struct RiskEstimate {
  double value = 0.0;
  std::size_t n_terms = 0;
};

/**
 * Least-squares AR fit on a chunk matrix: columns 0..d-2 are the regressors,
 * column d-1 the response.  Solves the normal equations X'X theta = X'y
 * through a symmetric eigendecomposition of the Gram matrix; a reciprocal
 * condition number below 1e-12 raises DegenerateDesignError.
 */
ArModel fit_ar(const ChunkMatrix& chunks);

/// Squared prediction error (z_d - theta . z_{1..d-1})^2.
double loss(std::span<const double> z, const ArModel& model);

/// Mean loss of the model over every row of the chunk matrix.
RiskEstimate empirical_risk(const ChunkMatrix& chunks, const ArModel& model);

}  // namespace tsboot
