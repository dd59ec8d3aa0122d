#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tsboot/rng.hpp"
#include "tsboot/series.hpp"

namespace tsboot {

enum class StationarityPolicy { warn, error, ignore };

/**
 * ARMA(p,q) recursion X_t = sum phi_i X_{t-i} + sum theta_j eps_{t-j} + eps_t
 * with eps ~ Normal(0, noise_sd^2).
 *
 * validate() checks the AR polynomial's roots; a root on or inside the unit
 * circle is reported per `on_nonstationary` (default: warn once to stderr,
 * since a boundary case is a legitimate configuration to study).
 */
struct ArmaSpec {
  std::vector<double> phi;
  std::vector<double> theta;
  double noise_sd = 1.0;
  StationarityPolicy on_nonstationary = StationarityPolicy::warn;

  void validate() const;
};

/**
 * AR(1)-ARCH(1): X_t = phi1 X_{t-1} + eps_t, eps_t = sqrt(h_t) z_t,
 * h_t = omega + alpha1 eps_{t-1}^2, z ~ Normal(0,1).
 *
 * validate() enforces |phi1| < 1, omega > 0, alpha1 >= 0 and the geometric
 * ergodicity condition E log(alpha1 z^2) < 0, i.e. log(alpha1) < gamma+log 2
 * (about 1.2704).
 */
struct ArArchSpec {
  double phi1 = 0.8;
  double omega = 1.0;
  double alpha1 = 0.99;

  void validate() const;
};

/// One regime of a Markov-switching recursion:
/// y_t = sum phi_i y_{t-i} + sum theta_j e_{t-j} + e0 * e_t.
struct Regime {
  std::vector<double> phi;
  std::vector<double> theta;
  double e0 = 1.0;
};

/**
 * Markov-switching process: a regime chain evolving by the row-stochastic
 * transition matrix selects which regime's coefficients produce y_t; the y
 * and e histories are shared across switches.  e ~ Normal(0, noise_sd^2) is
 * drawn every step regardless of regime.
 */
struct MarkovSwitchSpec {
  std::vector<Regime> regimes;
  std::vector<std::vector<double>> transition;  // rows sum to 1 within 1e-12
  double noise_sd = 1.0;

  void validate() const;
};

using DgpSpec = std::variant<ArmaSpec, ArArchSpec, MarkovSwitchSpec>;

/// Short process name for reports ("arma", "ar_arch", "markov_switching").
std::string dgp_name(const DgpSpec& spec);

Series simulate_arma(const ArmaSpec& spec, std::size_t n, std::size_t burnin, RngStream rng);
Series simulate_ar_arch(const ArArchSpec& spec, std::size_t n, std::size_t burnin, RngStream rng);
Series simulate_markov_switching(const MarkovSwitchSpec& spec, std::size_t n, std::size_t burnin,
                                 RngStream rng);

/// Markov-switching run that also reports the regime index active at each
/// returned observation.
struct MsPath {
  Series series;
  std::vector<std::size_t> regimes;
};
MsPath simulate_markov_switching_path(const MarkovSwitchSpec& spec, std::size_t n,
                                      std::size_t burnin, RngStream rng);

/// Simulate any process spec.
Series simulate(const DgpSpec& spec, std::size_t n, std::size_t burnin, RngStream rng);

/// One realization split into a training segment and its continuation:
/// the horizon values are the same run of the process, not a fresh one.
struct SplitPath {
  Series train;
  std::vector<double> future;
};
SplitPath simulate_split(const DgpSpec& spec, std::size_t n, std::size_t horizon,
                         std::size_t burnin, RngStream rng);

/// Default burn-in depth used by the CLI and experiment harness.
inline constexpr std::size_t kDefaultBurnin = 1000;

}  // namespace tsboot
