#pragma once

#include <cstdint>
#include <cstddef>

namespace tsboot {

/**
 * Counter-based, splittable pseudo-random stream.
 *
 * A stream is identified by a (seed, stream-id) pair; the same pair always
 * produces the same draw sequence, independent of thread schedule, because
 * output i is a pure function of the stream key and a counter.  child(k)
 * derives a new stream whose key folds k into the parent's key, so nested
 * experiment loops (replicate j, bootstrap iteration i, train/test split)
 * can hand every task its own stream without coordination.
 *
 * The generator is SplitMix64 in counter mode.  Not cryptographic.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Derive a statistically independent substream. Does not consume draws,
  /// and is unaffected by how many draws the parent has produced.
  [[nodiscard]] RngStream child(std::uint64_t k) const;

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0,1) with 52-bit granularity.
  double uniform01();

  /// Unbiased uniform integer in [0, n). Requires n >= 1.
  std::size_t uniform_below(std::size_t n);

  /// Standard normal draw via the inverse CDF applied to uniform01().
  double normal();
  double normal(double mean, double sd);

  /// Root seed this stream (and all its ancestors) was created from.
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  RngStream() = default;

  std::uint64_t seed_ = 0;  // root seed, for reporting
  std::uint64_t key_ = 0;   // stream identity
  std::uint64_t ctr_ = 0;   // draws consumed
};

/// Inverse of the standard normal CDF (Wichura's PPND16 rational
/// approximation, accurate to ~1e-16 for p in (0,1)).
double normal_quantile(double p);

}  // namespace tsboot
