#include "tsboot/block_length.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsboot/errors.hpp"

namespace tsboot {

namespace {

// Biased sample autocovariances R(0..max_lag), 1/n normalization.
std::vector<double> autocovariances(std::span<const double> y, std::size_t max_lag) {
  const std::size_t n = y.size();
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(n);

  std::vector<double> r(max_lag + 1, 0.0);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) acc += (y[i] - mean) * (y[i + k] - mean);
    r[k] = acc / static_cast<double>(n);
  }
  return r;
}

double flat_top_weight(std::size_t k, std::size_t big_m) {
  if (2 * k <= big_m) return 1.0;
  return 2.0 * (1.0 - static_cast<double>(k) / static_cast<double>(big_m));
}

}  // namespace

std::size_t block_length(const Series& series) {
  const std::size_t n = series.size();
  if (n < 10) throw InputError("block_length: series must have at least 10 observations");
  const auto y = series.values();

  const double log10n = std::log10(static_cast<double>(n));
  const std::size_t k_n = std::max<std::size_t>(5, static_cast<std::size_t>(std::ceil(std::sqrt(log10n))));
  const std::size_t m_max = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const double band = 2.0 * std::sqrt(log10n / static_cast<double>(n));

  const std::size_t max_lag = std::min(n - 1, std::max(2 * m_max, m_max + k_n));
  const std::vector<double> r = autocovariances(y, max_lag);
  if (!(r[0] > 0.0)) return 1;  // zero variance: no correlation structure

  std::size_t m_hat = m_max;
  for (std::size_t m = 1; m <= m_max; ++m) {
    bool inside = true;
    for (std::size_t k = m + 1; k <= m + k_n && inside; ++k) {
      const double rho = (k <= max_lag) ? r[k] / r[0] : 0.0;
      if (std::abs(rho) >= band) inside = false;
    }
    if (inside) {
      m_hat = m;
      break;
    }
  }

  const std::size_t big_m = std::min(2 * m_hat, n - 1);
  double g_hat = 0.0;
  double spectral0 = r[0];
  for (std::size_t k = 1; k <= big_m; ++k) {
    const double w = flat_top_weight(k, big_m);
    g_hat += 2.0 * w * static_cast<double>(k) * r[k];
    spectral0 += 2.0 * w * r[k];
  }
  const double d_hat = (4.0 / 3.0) * spectral0 * spectral0;
  if (!(d_hat > 0.0) || !std::isfinite(g_hat)) return 1;

  const double raw =
      std::cbrt(2.0 * g_hat * g_hat / d_hat) * std::cbrt(static_cast<double>(n));
  const double cap = std::ceil(std::min(3.0 * std::sqrt(static_cast<double>(n)),
                                        static_cast<double>(n) / 3.0));
  const double clipped = std::clamp(std::round(raw), 1.0, cap);
  return static_cast<std::size_t>(clipped);
}

}  // namespace tsboot
