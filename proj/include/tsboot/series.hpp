#pragma once

#include <memory>
#include <span>
#include <vector>

namespace tsboot {

/**
 * An immutable, finite, ordered sequence of observations Y_1..Y_t.
 *
 * Values are shared by reference-counted ownership so chunk views stay
 * valid and cheap to copy across threads.
 */
class Series {
 public:
  /// Takes ownership of the values. Throws InputError if empty or if any
  /// value is NaN or infinite.
  explicit Series(std::vector<double> values);

  [[nodiscard]] std::size_t size() const { return values_->size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return (*values_)[i]; }
  [[nodiscard]] std::span<const double> values() const { return {values_->data(), values_->size()}; }

  /// Shared handle to the storage, used by ChunkMatrix views.
  [[nodiscard]] std::shared_ptr<const std::vector<double>> storage() const { return values_; }

 private:
  std::shared_ptr<const std::vector<double>> values_;
};

}  // namespace tsboot
