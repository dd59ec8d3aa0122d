#include "tsboot/reference.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tsboot/block_length.hpp"
#include "tsboot/errors.hpp"
#include "tsboot/quantile.hpp"

namespace tsboot::reference {

BoundResult gen_error_bound(const Series& series, const BoundConfig& config, RngStream rng) {
  const std::size_t t = series.size();
  const std::size_t d = config.d;
  if (d < 2) throw InputError("gen_error_bound: d must be at least 2");
  if (t < 2 * d) throw InputError("gen_error_bound: series length must be at least 2d");
  if (config.n_bootstrap < 1) throw InputError("gen_error_bound: B must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InputError("gen_error_bound: alpha must lie in (0,1)");
  }

  const ChunkMatrix linear = embed(series, d, EmbedMode::linear);
  const ArModel model = fit_ar(linear);
  const double train_error = empirical_risk(linear, model).value;

  const std::size_t ell = config.ell ? *config.ell : block_length(series);
  const ChunkMatrix circular = embed(series, d, EmbedMode::circular);
  const CbbPlan plan = CbbPlan::make(ell, t, t - d + 1);

  BoundResult out;
  out.train_error = train_error;
  out.alpha = config.alpha;
  out.ell_used = ell;
  out.seed = rng.seed();
  out.model = model;
  out.eta_samples.reserve(config.n_bootstrap);
  for (std::size_t i = 0; i < config.n_bootstrap; ++i) {
    const auto sample = detail::bound_replicate(circular, plan, rng.child(i));
    if (sample) out.eta_samples.push_back(*sample);
  }
  out.n_failed = config.n_bootstrap - out.eta_samples.size();
  if (out.n_failed * 100 > config.n_bootstrap) {
    throw DegenerateDesignError("gen_error_bound: too many degenerate replicates");
  }
  out.eta_quantile = empirical_quantile(out.eta_samples, 1.0 - config.alpha);
  out.upper_bound = out.train_error + out.eta_quantile;
  return out;
}

CoverageReport coverage_experiment(const CoverageConfig& config, RngStream rng) {
  if (config.sample_sizes.empty()) throw InputError("coverage_experiment: no sample sizes");
  if (config.n_outer < 1) throw InputError("coverage_experiment: n_outer must be at least 1");

  CoverageReport report;
  report.dgp = dgp_name(config.dgp);
  report.model_order = config.d - 1;
  report.alpha = config.alpha;
  report.sample_sizes = config.sample_sizes;
  report.n_outer = config.n_outer;
  report.n_bootstrap = config.n_bootstrap;
  report.oracle_horizon = config.oracle_horizon;
  report.seed = rng.seed();

  for (std::size_t size_idx = 0; size_idx < config.sample_sizes.size(); ++size_idx) {
    const std::size_t n = config.sample_sizes[size_idx];
    const RngStream size_rng = rng.child(size_idx);
    std::size_t n_fail = 0, n_cov = 0;
    for (std::size_t j = 0; j < config.n_outer; ++j) {
      const auto outcome = detail::coverage_replicate(config, n, size_rng.child(j));
      if (outcome.covered < 0) ++n_fail;
      else if (outcome.covered == 1) ++n_cov;
    }
    if (n_fail * 50 > config.n_outer) {
      throw DegenerateDesignError("coverage_experiment: more than 2% of replicates failed at n=" +
                                  std::to_string(n));
    }
    const std::size_t denom = config.n_outer - n_fail;
    report.failures.push_back(n_fail);
    report.coverage.push_back(denom == 0 ? 0.0
                                         : static_cast<double>(n_cov) / static_cast<double>(denom));
  }
  return report;
}

std::vector<double> sampling_distribution_eta(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                              std::size_t n_runs, std::size_t burnin,
                                              RngStream rng) {
  if (n_runs < 100) throw InputError("sampling_distribution_eta: need at least 100 runs");
  std::vector<double> eta;
  eta.reserve(n_runs);
  for (std::size_t r = 0; r < n_runs; ++r) eta.push_back(detail::eta_run(dgp, n, d, burnin, rng.child(r)));
  return eta;
}

CvNormalitySamples cv_normality_samples(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                        std::size_t k, std::size_t n_runs, std::size_t burnin,
                                        RngStream rng) {
  if (n_runs < 100) throw InputError("cv_normality_samples: need at least 100 runs");
  std::vector<double> kept;
  kept.reserve(n_runs);
  std::size_t n_failed = 0;
  for (std::size_t r = 0; r < n_runs; ++r) {
    try {
      const Series s = simulate(dgp, n, burnin, rng.child(r));
      kept.push_back(kfold_cv_risk(s, d, k).value);
    } catch (const Error&) {
      ++n_failed;
    }
  }
  if (kept.size() < 2) throw DegenerateDesignError("cv_normality_samples: nearly all runs failed");

  CvNormalitySamples out;
  out.n_failed = n_failed;
  out.mean = std::accumulate(kept.begin(), kept.end(), 0.0) / static_cast<double>(kept.size());
  double ss = 0.0;
  for (double v : kept) ss += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(kept.size() - 1));
  if (!(out.sd > 0.0)) throw DegenerateDesignError("cv_normality_samples: zero variance across runs");
  out.standardized.reserve(kept.size());
  for (double v : kept) out.standardized.push_back((v - out.mean) / out.sd);
  return out;
}

}  // namespace tsboot::reference
