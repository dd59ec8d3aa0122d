#include "tsboot/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsboot/errors.hpp"

namespace tsboot {

double empirical_quantile(std::span<const double> samples, double level) {
  if (samples.empty()) throw InputError("empirical_quantile: empty sample set");
  if (!(level > 0.0 && level < 1.0)) throw InputError("empirical_quantile: level must lie in (0,1)");

  const auto n = samples.size();
  // ceil(level*n) with a snap to the nearest integer: level*n computed in
  // floating point can land an ulp above an exact rank (0.95*100 > 95) and
  // ceil alone would then select the wrong order statistic.
  const double x = level * static_cast<double>(n);
  const double nearest = std::nearbyint(x);
  std::size_t rank;
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    rank = static_cast<std::size_t>(nearest);
  } else {
    rank = static_cast<std::size_t>(std::ceil(x));
  }
  rank = std::clamp<std::size_t>(rank, 1, n);

  std::vector<double> work(samples.begin(), samples.end());
  auto nth = work.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(work.begin(), nth, work.end());
  return *nth;
}

}  // namespace tsboot
