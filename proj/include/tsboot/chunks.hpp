#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tsboot/series.hpp"

namespace tsboot {

enum class EmbedMode { linear, circular };

/**
 * A matrix of d-wide delay-embedding chunks Z_i = (Y_i, ..., Y_{i+d-1}).
 *
 * Rows are views into the parent series: row r starts at series position
 * starts()[r] and indices past the end wrap modulo the series length, so
 * circular embedding and block resampling never copy observations, only
 * start indices.
 */
class ChunkMatrix {
 public:
  [[nodiscard]] std::size_t rows() const { return starts_.size(); }
  [[nodiscard]] std::size_t cols() const { return d_; }
  [[nodiscard]] EmbedMode mode() const { return mode_; }
  [[nodiscard]] std::size_t series_length() const { return t_; }
  [[nodiscard]] std::span<const std::size_t> starts() const { return {starts_.data(), starts_.size()}; }

  [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
    // starts_[row] < t_ and col < d_ <= t_, so one wrap test suffices.
    std::size_t k = starts_[row] + col;
    if (k >= t_) k -= t_;
    return (*values_)[k];
  }

  /// Copy one row into a d-vector.
  [[nodiscard]] std::vector<double> row(std::size_t r) const;

  /// View of rows [begin, begin+count).
  [[nodiscard]] ChunkMatrix slice_rows(std::size_t begin, std::size_t count) const;

  /// View of an arbitrary row subset, in the order given.
  [[nodiscard]] ChunkMatrix take_rows(std::span<const std::size_t> row_indices) const;

  ChunkMatrix(std::shared_ptr<const std::vector<double>> values, std::size_t d,
              std::vector<std::size_t> starts, EmbedMode mode);

 private:
  std::shared_ptr<const std::vector<double>> values_;
  std::size_t t_ = 0;
  std::size_t d_ = 0;
  std::vector<std::size_t> starts_;
  EmbedMode mode_ = EmbedMode::linear;
};

/**
 * Delay-embed a series into chunks of width d.
 *
 * linear:   t-d+1 rows, row i = (Y_i, ..., Y_{i+d-1});
 * circular: t rows, indices past t wrap around to the start of the series.
 *
 * Requires 1 <= d <= t.
 */
ChunkMatrix embed(const Series& series, std::size_t d, EmbedMode mode);

}  // namespace tsboot
