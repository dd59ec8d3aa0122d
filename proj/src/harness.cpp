#include "tsboot/harness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsboot/errors.hpp"
#include "tsboot/quantile.hpp"

namespace tsboot {

RiskOracleResult oracle_risk_continuation(std::span<const double> context,
                                          std::span<const double> future, const ArModel& model) {
  const std::size_t d = model.chunk_width();
  if (context.size() != d - 1) {
    throw DimensionError("oracle_risk_continuation: context must hold exactly d-1 values");
  }
  if (future.empty()) throw InputError("oracle_risk_continuation: empty continuation");

  std::vector<double> joined;
  joined.reserve(context.size() + future.size());
  joined.insert(joined.end(), context.begin(), context.end());
  joined.insert(joined.end(), future.begin(), future.end());

  const Series path{std::move(joined)};
  const ChunkMatrix chunks = embed(path, d, EmbedMode::linear);
  const RiskEstimate risk = empirical_risk(chunks, model);  // one chunk per future value
  return {risk.value, risk.n_terms};
}

RiskOracleResult oracle_risk_independent(const DgpSpec& dgp, const ArModel& model, std::size_t m,
                                         std::size_t burnin, RngStream rng) {
  if (m < 1) throw InputError("oracle_risk_independent: horizon must be at least 1");
  const std::size_t d = model.chunk_width();
  const Series fresh = simulate(dgp, m + d - 1, burnin, rng);
  const RiskEstimate risk = empirical_risk(embed(fresh, d, EmbedMode::linear), model);
  return {risk.value, risk.n_terms};
}

namespace detail {

CoverageOutcome coverage_replicate(const CoverageConfig& config, std::size_t n,
                                   const RngStream& replicate_rng) {
  CoverageOutcome out;
  try {
    const std::size_t horizon =
        (config.oracle_mode == OracleMode::continuation) ? config.oracle_horizon : 0;
    const SplitPath path = simulate_split(config.dgp, n, horizon, config.burnin, replicate_rng.child(0));

    BoundConfig bc;
    bc.d = config.d;
    bc.n_bootstrap = config.n_bootstrap;
    bc.alpha = config.alpha;
    bc.ell = config.ell;
    const BoundResult bound = gen_error_bound(path.train, bc, replicate_rng.child(1));

    RiskOracleResult oracle;
    if (config.oracle_mode == OracleMode::continuation) {
      const auto train = path.train.values();
      oracle = oracle_risk_continuation(train.subspan(train.size() - (config.d - 1)), path.future,
                                        bound.model);
    } else {
      oracle = oracle_risk_independent(config.dgp, bound.model, config.oracle_horizon,
                                       config.burnin, replicate_rng.child(2));
    }
    out.covered = (oracle.risk <= bound.upper_bound) ? 1 : 0;
  } catch (const Error&) {
    out.covered = -1;
  }
  return out;
}

double eta_run(const DgpSpec& dgp, std::size_t n, std::size_t d, std::size_t burnin,
               const RngStream& run_rng) {
  const std::size_t t0 = n - d + 1;
  const Series path = simulate(dgp, 2 * t0 + d - 1, burnin, run_rng);
  const ChunkMatrix chunks = embed(path, d, EmbedMode::linear);  // 2*t0 rows
  const ChunkMatrix train = chunks.slice_rows(0, t0);
  const ChunkMatrix test = chunks.slice_rows(t0, t0);
  const ArModel model = fit_ar(train);
  return empirical_risk(test, model).value - empirical_risk(train, model).value;
}

}  // namespace detail

CoverageReport coverage_experiment(const CoverageConfig& config, RngStream rng) {
  if (config.sample_sizes.empty()) throw InputError("coverage_experiment: no sample sizes");
  if (config.n_outer < 1) throw InputError("coverage_experiment: n_outer must be at least 1");
  if (config.d < 2) throw InputError("coverage_experiment: d must be at least 2");
  for (std::size_t n : config.sample_sizes) {
    if (n < 2 * config.d) throw InputError("coverage_experiment: sample size below 2d");
  }

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
    std::vector<signed char> covered(config.n_outer, -1);

#pragma omp parallel for schedule(dynamic)
    for (long long j = 0; j < static_cast<long long>(config.n_outer); ++j) {
      const auto idx = static_cast<std::size_t>(j);
      covered[idx] = detail::coverage_replicate(config, n, size_rng.child(idx)).covered;
    }

    std::size_t n_fail = 0, n_cov = 0;
    for (signed char c : covered) {
      if (c < 0) ++n_fail;
      else if (c == 1) ++n_cov;
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
  if (d < 2) throw InputError("sampling_distribution_eta: d must be at least 2");
  if (n < 2 * d) throw InputError("sampling_distribution_eta: n must be at least 2d");

  std::vector<double> eta(n_runs, 0.0);
  std::vector<unsigned char> failed(n_runs, 0);

#pragma omp parallel for schedule(dynamic, 8)
  for (long long r = 0; r < static_cast<long long>(n_runs); ++r) {
    const auto idx = static_cast<std::size_t>(r);
    try {
      eta[idx] = detail::eta_run(dgp, n, d, burnin, rng.child(idx));
    } catch (const Error&) {
      failed[idx] = 1;
    }
  }

  const auto n_failed = static_cast<std::size_t>(
      std::count(failed.begin(), failed.end(), static_cast<unsigned char>(1)));
  if (n_failed > 0) {
    throw DegenerateDesignError("sampling_distribution_eta: " + std::to_string(n_failed) +
                                " of " + std::to_string(n_runs) + " runs failed to fit");
  }
  return eta;
}

std::vector<QqPoint> qq_data(std::span<const double> standardized_samples) {
  const std::size_t n = standardized_samples.size();
  if (n < 100) throw InputError("qq_data: need at least 100 samples");
  std::vector<double> sorted(standardized_samples.begin(), standardized_samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<QqPoint> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].theoretical = normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(n));
    out[i].sample = sorted[i];
  }
  return out;
}

}  // namespace tsboot
