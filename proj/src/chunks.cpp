#include "tsboot/chunks.hpp"

#include <numeric>
#include <string>

#include "tsboot/errors.hpp"

namespace tsboot {

ChunkMatrix::ChunkMatrix(std::shared_ptr<const std::vector<double>> values, std::size_t d,
                         std::vector<std::size_t> starts, EmbedMode mode)
    : values_(std::move(values)), t_(values_->size()), d_(d), starts_(std::move(starts)), mode_(mode) {
  if (d_ < 1 || d_ > t_) throw DimensionError("ChunkMatrix: chunk width must lie in [1, t]");
}

std::vector<double> ChunkMatrix::row(std::size_t r) const {
  std::vector<double> out(d_);
  for (std::size_t j = 0; j < d_; ++j) out[j] = (*this)(r, j);
  return out;
}

ChunkMatrix ChunkMatrix::slice_rows(std::size_t begin, std::size_t count) const {
  if (begin + count > rows()) throw InputError("ChunkMatrix::slice_rows: range exceeds row count");
  std::vector<std::size_t> sub(starts_.begin() + static_cast<std::ptrdiff_t>(begin),
                               starts_.begin() + static_cast<std::ptrdiff_t>(begin + count));
  return {values_, d_, std::move(sub), mode_};
}

ChunkMatrix ChunkMatrix::take_rows(std::span<const std::size_t> row_indices) const {
  std::vector<std::size_t> sub;
  sub.reserve(row_indices.size());
  for (std::size_t r : row_indices) {
    if (r >= rows()) throw InputError("ChunkMatrix::take_rows: row index out of range");
    sub.push_back(starts_[r]);
  }
  return {values_, d_, std::move(sub), mode_};
}

ChunkMatrix embed(const Series& series, std::size_t d, EmbedMode mode) {
  const std::size_t t = series.size();
  if (d < 1) throw InputError("embed: chunk width d must be at least 1");
  if (d > t) {
    throw DimensionError("embed: chunk width d=" + std::to_string(d) +
                         " exceeds series length t=" + std::to_string(t));
  }
  const std::size_t n_rows = (mode == EmbedMode::linear) ? t - d + 1 : t;
  std::vector<std::size_t> starts(n_rows);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  return {series.storage(), d, std::move(starts), mode};
}

}  // namespace tsboot
