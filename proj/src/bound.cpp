#include "tsboot/bound.hpp"

#include <string>

#include "tsboot/block_length.hpp"
#include "tsboot/errors.hpp"
#include "tsboot/quantile.hpp"

namespace tsboot {

namespace detail {

std::optional<double> bound_replicate(const ChunkMatrix& circular_chunks, const CbbPlan& plan,
                                      const RngStream& replicate_rng) {
  RngStream train_rng = replicate_rng.child(0);
  RngStream test_rng = replicate_rng.child(1);
  const ChunkMatrix train = cbb_resample(circular_chunks, plan, train_rng);
  const ChunkMatrix test = cbb_resample(circular_chunks, plan, test_rng);
  ArModel star;
  try {
    star = fit_ar(train);
  } catch (const DegenerateDesignError&) {
    return std::nullopt;
  }
  const double train_err = empirical_risk(train, star).value;
  const double test_err = empirical_risk(test, star).value;
  return test_err - train_err;
}

}  // namespace detail

BoundResult gen_error_bound(const Series& series, const BoundConfig& config, RngStream rng) {
  const std::size_t t = series.size();
  const std::size_t d = config.d;
  if (d < 2) throw InputError("gen_error_bound: d must be at least 2");
  if (t < 2 * d) throw InputError("gen_error_bound: series length must be at least 2d");
  if (config.n_bootstrap < 1) throw InputError("gen_error_bound: B must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InputError("gen_error_bound: alpha must lie in (0,1)");
  }
  if (config.ell && *config.ell < 1) throw InputError("gen_error_bound: block length must be at least 1");

  const ChunkMatrix linear = embed(series, d, EmbedMode::linear);
  const ArModel model = fit_ar(linear);
  const double train_error = empirical_risk(linear, model).value;

  const std::size_t ell = config.ell ? *config.ell : block_length(series);
  const std::size_t t0 = t - d + 1;
  const ChunkMatrix circular = embed(series, d, EmbedMode::circular);
  const CbbPlan plan = CbbPlan::make(ell, t, t0);

  const std::size_t B = config.n_bootstrap;
  std::vector<double> eta(B, 0.0);
  std::vector<unsigned char> ok(B, 0);

#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < static_cast<long long>(B); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const auto sample = detail::bound_replicate(circular, plan, rng.child(idx));
    if (sample) {
      eta[idx] = *sample;
      ok[idx] = 1;
    }
  }

  BoundResult out;
  out.train_error = train_error;
  out.alpha = config.alpha;
  out.ell_used = ell;
  out.seed = rng.seed();
  out.model = model;
  out.eta_samples.reserve(B);
  for (std::size_t i = 0; i < B; ++i) {
    if (ok[i]) out.eta_samples.push_back(eta[i]);
  }
  out.n_failed = B - out.eta_samples.size();
  if (out.n_failed * 100 > B) {
    throw DegenerateDesignError("gen_error_bound: " + std::to_string(out.n_failed) + " of " +
                                std::to_string(B) + " bootstrap replicates degenerate (>1%)");
  }

  out.eta_quantile = empirical_quantile(out.eta_samples, 1.0 - config.alpha);
  out.upper_bound = out.train_error + out.eta_quantile;
  return out;
}

}  // namespace tsboot
