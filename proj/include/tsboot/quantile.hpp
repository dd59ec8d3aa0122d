#pragma once

#include <span>

namespace tsboot {

/**
 * Empirical quantile as the order statistic of rank ceil(level * B),
 * B = samples.size() (inverse-CDF convention: always a realized sample
 * value, never interpolated).  level must lie in (0,1); samples must be
 * nonempty.
 */
double empirical_quantile(std::span<const double> samples, double level);

}  // namespace tsboot
