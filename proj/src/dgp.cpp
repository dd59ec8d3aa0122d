#include "tsboot/dgp.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <iostream>
#include <string>

#include "tsboot/errors.hpp"

namespace tsboot {

namespace {

// E[log z^2] for standard normal z is -(gamma + log 2).
constexpr double kArchLogBound = 1.2703628454614782;

bool ar_polynomial_stationary(const std::vector<double>& phi) {
  // Roots of 1 - phi_1 z - ... - phi_p z^p strictly outside the unit circle
  // iff the companion matrix spectral radius is strictly below 1.
  std::size_t p = phi.size();
  while (p > 0 && phi[p - 1] == 0.0) --p;
  if (p == 0) return true;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p),
                                                    static_cast<Eigen::Index>(p));
  for (std::size_t j = 0; j < p; ++j) companion(0, static_cast<Eigen::Index>(j)) = phi[j];
  for (std::size_t i = 1; i < p; ++i) companion(static_cast<Eigen::Index>(i),
                                                static_cast<Eigen::Index>(i - 1)) = 1.0;
  const auto radius = companion.eigenvalues().cwiseAbs().maxCoeff();
  return radius < 1.0 - 1e-10;
}

void check_counts(std::size_t n) {
  if (n < 1) throw InputError("simulate: n must be at least 1");
}

}  // namespace

void ArmaSpec::validate() const {
  if (!(noise_sd > 0.0)) throw SpecError("ArmaSpec: noise_sd must be positive");
  if (on_nonstationary == StationarityPolicy::ignore) return;
  if (!ar_polynomial_stationary(phi)) {
    if (on_nonstationary == StationarityPolicy::error) {
      throw SpecError("ArmaSpec: AR polynomial has a root on or inside the unit circle");
    }
    // Warn once per process: validation runs inside every simulation call.
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true)) {
      std::cerr << "tsboot warning: ARMA AR polynomial has a root on or inside the unit circle; "
                   "simulating as specified\n";
    }
  }
}

void ArArchSpec::validate() const {
  if (!(omega > 0.0)) throw SpecError("ArArchSpec: omega must be positive");
  if (alpha1 < 0.0) throw SpecError("ArArchSpec: alpha1 must be nonnegative");
  if (!(std::abs(phi1) < 1.0)) throw SpecError("ArArchSpec: |phi1| must be below 1");
  if (alpha1 > 0.0 && !(std::log(alpha1) < kArchLogBound)) {
    throw SpecError("ArArchSpec: E[log(alpha1 z^2)] >= 0, process not geometrically ergodic");
  }
}

void MarkovSwitchSpec::validate() const {
  if (!(noise_sd > 0.0)) throw SpecError("MarkovSwitchSpec: noise_sd must be positive");
  if (regimes.empty()) throw SpecError("MarkovSwitchSpec: at least one regime required");
  const std::size_t r = regimes.size();
  if (transition.size() != r) throw SpecError("MarkovSwitchSpec: transition matrix must be r x r");
  for (const auto& row : transition) {
    if (row.size() != r) throw SpecError("MarkovSwitchSpec: transition matrix must be r x r");
    double sum = 0.0;
    for (double v : row) {
      if (v < 0.0) throw SpecError("MarkovSwitchSpec: transition entries must be nonnegative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw SpecError("MarkovSwitchSpec: transition rows must sum to 1 (got " + std::to_string(sum) + ")");
    }
  }
}

namespace {

std::vector<double> arma_values(const ArmaSpec& spec, std::size_t total, RngStream& rng) {
  const std::size_t p = spec.phi.size();
  const std::size_t q = spec.theta.size();
  std::vector<double> y(total), e(total);
  for (std::size_t t = 0; t < total; ++t) {
    e[t] = spec.noise_sd * rng.normal();
    double acc = e[t];
    for (std::size_t i = 1; i <= p && i <= t; ++i) acc += spec.phi[i - 1] * y[t - i];
    for (std::size_t j = 1; j <= q && j <= t; ++j) acc += spec.theta[j - 1] * e[t - j];
    y[t] = acc;
  }
  return y;
}

std::vector<double> ar_arch_values(const ArArchSpec& spec, std::size_t total, RngStream& rng) {
  std::vector<double> y(total);
  double h = (spec.alpha1 < 1.0) ? spec.omega / (1.0 - spec.alpha1) : spec.omega;
  double eps_prev = 0.0;
  for (std::size_t t = 0; t < total; ++t) {
    if (t > 0) h = spec.omega + spec.alpha1 * eps_prev * eps_prev;
    const double eps = std::sqrt(h) * rng.normal();
    y[t] = (t >= 1 ? spec.phi1 * y[t - 1] : 0.0) + eps;
    eps_prev = eps;
  }
  return y;
}

struct MsValues {
  std::vector<double> y;
  std::vector<std::size_t> regime;
};

MsValues markov_switching_values(const MarkovSwitchSpec& spec, std::size_t total, RngStream& rng) {
  MsValues out;
  out.y.resize(total);
  out.regime.resize(total);
  std::vector<double> e(total);
  std::size_t state = 0;
  for (std::size_t t = 0; t < total; ++t) {
    // One uniform for the chain step, then one normal, every step.
    const double u = rng.uniform01();
    const auto& row = spec.transition[state];
    double cum = 0.0;
    std::size_t next = row.size() - 1;
    for (std::size_t s = 0; s < row.size(); ++s) {
      cum += row[s];
      if (u < cum) {
        next = s;
        break;
      }
    }
    state = next;
    e[t] = spec.noise_sd * rng.normal();

    const Regime& reg = spec.regimes[state];
    double acc = reg.e0 * e[t];
    for (std::size_t i = 1; i <= reg.phi.size() && i <= t; ++i) acc += reg.phi[i - 1] * out.y[t - i];
    for (std::size_t j = 1; j <= reg.theta.size() && j <= t; ++j) acc += reg.theta[j - 1] * e[t - j];
    out.y[t] = acc;
    out.regime[t] = state;
  }
  return out;
}

std::vector<double> simulate_values(const DgpSpec& spec, std::size_t total, RngStream& rng) {
  return std::visit(
      [&](const auto& s) -> std::vector<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ArmaSpec>) return arma_values(s, total, rng);
        else if constexpr (std::is_same_v<T, ArArchSpec>) return ar_arch_values(s, total, rng);
        else return markov_switching_values(s, total, rng).y;
      },
      spec);
}

Series tail_series(std::vector<double>&& values, std::size_t n) {
  std::vector<double> kept(values.end() - static_cast<std::ptrdiff_t>(n), values.end());
  return Series(std::move(kept));
}

}  // namespace

std::string dgp_name(const DgpSpec& spec) {
  if (std::holds_alternative<ArmaSpec>(spec)) return "arma";
  if (std::holds_alternative<ArArchSpec>(spec)) return "ar_arch";
  return "markov_switching";
}

Series simulate_arma(const ArmaSpec& spec, std::size_t n, std::size_t burnin, RngStream rng) {
  check_counts(n);
  spec.validate();
  return tail_series(arma_values(spec, burnin + n, rng), n);
}

Series simulate_ar_arch(const ArArchSpec& spec, std::size_t n, std::size_t burnin, RngStream rng) {
  check_counts(n);
  spec.validate();
  return tail_series(ar_arch_values(spec, burnin + n, rng), n);
}

Series simulate_markov_switching(const MarkovSwitchSpec& spec, std::size_t n, std::size_t burnin,
                                 RngStream rng) {
  return simulate_markov_switching_path(spec, n, burnin, rng).series;
}

MsPath simulate_markov_switching_path(const MarkovSwitchSpec& spec, std::size_t n,
                                      std::size_t burnin, RngStream rng) {
  check_counts(n);
  spec.validate();
  MsValues all = markov_switching_values(spec, burnin + n, rng);
  MsPath out{tail_series(std::move(all.y), n),
             std::vector<std::size_t>(all.regime.end() - static_cast<std::ptrdiff_t>(n),
                                      all.regime.end())};
  return out;
}

Series simulate(const DgpSpec& spec, std::size_t n, std::size_t burnin, RngStream rng) {
  check_counts(n);
  std::visit([](const auto& s) { s.validate(); }, spec);
  return tail_series(simulate_values(spec, burnin + n, rng), n);
}

SplitPath simulate_split(const DgpSpec& spec, std::size_t n, std::size_t horizon,
                         std::size_t burnin, RngStream rng) {
  check_counts(n);
  std::visit([](const auto& s) { s.validate(); }, spec);
  std::vector<double> all = simulate_values(spec, burnin + n + horizon, rng);
  std::vector<double> train(all.begin() + static_cast<std::ptrdiff_t>(burnin),
                            all.begin() + static_cast<std::ptrdiff_t>(burnin + n));
  std::vector<double> future(all.begin() + static_cast<std::ptrdiff_t>(burnin + n), all.end());
  return {Series(std::move(train)), std::move(future)};
}

}  // namespace tsboot
