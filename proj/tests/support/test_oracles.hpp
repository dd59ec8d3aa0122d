#pragma once

// Independent oracles used by the test and acceptance suites.  Everything
// here is deliberately written from scratch (plain loops, no Eigen, no reuse
// of the library's numerics) so the checks stay independent of the
// implementation paths they validate.

#include <cstddef>
#include <span>
#include <vector>

#include "tsboot/chunks.hpp"

namespace tsboot::testing {

/// Materialize a chunk matrix as nested vectors.
std::vector<std::vector<double>> to_rows(const ChunkMatrix& chunks);

/// Least-squares fit of rows (d columns: d-1 regressors, last = response)
/// by forming the normal equations and solving them with Gaussian
/// elimination with partial pivoting.  Throws std::runtime_error when the
/// system is numerically singular.
std::vector<double> ols_normal_equations(const std::vector<std::vector<double>>& rows);

/// Independent transcription of the flat-top block-length rule used by
/// tsboot::block_length, kept as a line-by-line rendering of the recipe.
std::size_t block_length_reference(std::span<const double> y);

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Pearson correlation coefficient.
double pearson(std::span<const double> a, std::span<const double> b);

/// Sample mean and variance (n-1) helpers.
double mean_of(std::span<const double> v);
double variance_of(std::span<const double> v);

/// Lag-1 sample autocorrelation.
double lag1_autocorrelation(std::span<const double> v);

}  // namespace tsboot::testing
