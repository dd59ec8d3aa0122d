#pragma once

#include <cstddef>

#include "tsboot/series.hpp"

namespace tsboot {

/**
 * Data-driven block length for the circular block bootstrap
 * (Politis-White flat-top lag-window rule, sample-mean optimal).
 *
 * Steps, with n = series length, R(k) the biased sample autocovariances and
 * rho(k) = R(k)/R(0):
 *   1. m_hat = smallest m >= 1 with |rho(k)| < 2 sqrt(log10(n)/n) for all
 *      k = m+1 .. m+K_n, where K_n = max(5, ceil(sqrt(log10(n))));
 *      if no m up to ceil(sqrt(n)) qualifies, m_hat = ceil(sqrt(n)).
 *   2. M = 2 m_hat, flat-top weights w(k) = 1 for |k| <= M/2 and
 *      2(1 - |k|/M) for M/2 < |k| <= M.
 *   3. G = sum_{|k|<=M} w(k) |k| R(k),  D = (4/3) (sum_{|k|<=M} w(k) R(k))^2.
 *   4. ell = round((2 G^2 / D)^(1/3) n^(1/3)), clipped to
 *      [1, ceil(min(3 sqrt(n), n/3))].
 *
 * Deterministic in the series.  Zero-variance (or otherwise degenerate
 * spectral) input returns 1.  Requires n >= 10.
 */
std::size_t block_length(const Series& series);

}  // namespace tsboot
